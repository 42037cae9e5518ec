#include "doctest.h"

#include <cmath>
#include <complex>

#include "annuli/elliptic.hpp"
#include "annuli/error.hpp"
#include "oracles.hpp"

using namespace annuli;

namespace {
const double kPi = 3.14159265358979323846;

RectLattice lemniscatic() { return compute_lattice({4.0, 0.0}); }
}  // namespace

TEST_CASE("lemniscatic lattice: branch values and half-period vs quadrature oracle") {
  RectLattice lat = lemniscatic();
  CHECK(lat.e1 == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(lat.e2 == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(lat.e3 == doctest::Approx(-1.0).epsilon(1e-13));
  double oracle = oracles::lemniscatic_half_period();
  CHECK(std::fabs(lat.om1 - oracle) < 1e-12 * oracle);
  // square lattice
  CHECK(std::fabs(lat.om2_im - lat.om1) < 1e-12 * lat.om1);
}

TEST_CASE("half periods evaluate P to the branch values") {
  RectLattice lat = compute_lattice({0.5625, 0.0});  // from (r1,r2)=(-2,-0.5)
  cplx w1(lat.om1, 0), w2(0, lat.om2_im);
  CHECK(std::abs(lat.p(w1) - lat.e1) < 1e-12);
  CHECK(std::abs(lat.p(w2) - lat.e3) < 1e-12);
  CHECK(std::abs(lat.p(w1 + w2) - lat.e2) < 1e-12);
  CHECK(std::abs(lat.p_prime(w1)) < 1e-12);
  CHECK(std::abs(lat.p_prime(w2)) < 1e-12);
  CHECK(std::abs(lat.p_prime(w1 + w2)) < 1e-12);
}

TEST_CASE("Legendre relation holds to 1e-12 for assorted lattices") {
  const double g2s[] = {4.0, 0.5625, 7.3, 2.2};
  const double g3s[] = {0.0, 0.0, 1.1, -0.4};
  for (int i = 0; i < 4; ++i) {
    LatticeInvariants inv{g2s[i], g3s[i]};
    if (inv.delta_mod() <= 0) continue;
    RectLattice lat = compute_lattice(inv);
    cplx w12(lat.om1, lat.om2_im);
    cplx res = lat.omega2() * lat.zeta(w12) - w12 * lat.eta2() - cplx(0, kPi / 2);
    CHECK(std::abs(res) < 1e-12);
  }
}

TEST_CASE("near-diagonal lattice reproduces the degenerate im half-period") {
  // (r1, r2) -> (r, r) with r = -1 gives om2 -> i pi (-r)/sqrt(1-r^3) = i pi/sqrt(2)
  double r = -1.0, eps = 1e-7;
  double r1 = r - eps, r2 = r + eps;
  double r3 = 1 / (r1 * r2), b = (r1 + r2 + r3) / 3;
  double e[3] = {(b - r1) / 4, (b - r2) / 4, (b - r3) / 4};
  double g2 = -4 * (e[0] * e[1] + e[1] * e[2] + e[2] * e[0]);
  double g3 = 4 * e[0] * e[1] * e[2];
  RectLattice lat = compute_lattice({g2, g3});
  CHECK(lat.om2_im == doctest::Approx(kPi / std::sqrt(2.0)).epsilon(1e-7));
  CHECK(lat.om1 > 5.0);  // om1 diverges in the limit
}

TEST_CASE("P ODE residual on random points") {
  RectLattice lat = compute_lattice({7.3, 1.1});
  double g2 = lat.inv.g2, g3 = lat.inv.g3;
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    cplx z(oracles::uniform(-3 * lat.om1, 3 * lat.om1),
           oracles::uniform(-3 * lat.om2_im, 3 * lat.om2_im));
    if (lat.lattice_distance(z) < 1e-2) continue;
    cplx p = lat.p(z), pp = lat.p_prime(z);
    cplx res = pp * pp - (4.0 * p * p * p - g2 * p - g3);
    double scale = 1 + std::pow(std::abs(p), 3.0);
    CHECK(std::abs(res) < 1e-10 * scale);
    ++checked;
  }
  CHECK(checked > 900);
}

TEST_CASE("zeta and sigma satisfy their defining relations under differencing") {
  RectLattice lat = compute_lattice({2.2, -0.4});
  cplx z(0.37 * lat.om1, 0.61 * lat.om2_im);
  double h = 1e-6;
  cplx dz = (lat.zeta(z + h) - lat.zeta(z - h)) / (2 * h);
  CHECK(std::abs(dz + lat.p(z)) < 1e-7);
  cplx ds = (lat.sigma(z + h) - lat.sigma(z - h)) / (2 * h);
  CHECK(std::abs(ds / lat.sigma(z) - lat.zeta(z)) < 1e-7);
}

TEST_CASE("double periodicity of P") {
  RectLattice lat = compute_lattice({0.5625, 0.0});
  cplx z(0.31, 0.77);
  CHECK(std::abs(lat.p(z + 2 * lat.om1) - lat.p(z)) < 1e-12 * (1 + std::abs(lat.p(z))));
  CHECK(std::abs(lat.p(z + 2.0 * lat.omega2()) - lat.p(z)) <
        1e-12 * (1 + std::abs(lat.p(z))));
}

TEST_CASE("sigma quasi-periodicity matches the translation factor") {
  RectLattice lat = compute_lattice({7.3, 1.1});
  for (cplx z : {cplx(0.21, 0.33), cplx(-0.4, 0.9), cplx(1.1, -0.2)}) {
    cplx lhs = lat.sigma(z + 2 * lat.om1) / lat.sigma(z);
    cplx rhs = -std::exp(2.0 * lat.eta1 * (lat.om1 + z));
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs));
    // general (j,k) = (1,1)
    cplx sh = 2.0 * lat.om1 + 2.0 * lat.omega2();
    cplx lhs2 = lat.sigma(z + sh) / lat.sigma(z);
    cplx fac = -std::exp((2.0 * lat.eta1 + 2.0 * lat.eta2()) *
                         (lat.om1 + lat.omega2() + z));
    CHECK(std::abs(lhs2 - fac) < 1e-10 * std::abs(fac));
  }
}

TEST_CASE("zeta addition identity (quasi-periodic addition rule)") {
  RectLattice lat = compute_lattice({2.2, -0.4});
  for (int i = 0; i < 50; ++i) {
    cplx z1(oracles::uniform(0.05, 0.9) * lat.om1, oracles::uniform(0.05, 0.9) * lat.om2_im);
    cplx z2(oracles::uniform(0.05, 0.9) * lat.om1, oracles::uniform(-0.9, -0.05) * lat.om2_im);
    if (lat.lattice_distance(z1 + z2) < 1e-3 || lat.lattice_distance(z1 - z2) < 1e-3)
      continue;
    if (std::abs(lat.p(z1) - lat.p(z2)) < 1e-6) continue;
    cplx lhs = lat.zeta(z1 + z2) + lat.zeta(z1 - z2);
    cplx rhs = 2.0 * lat.zeta(z1) + lat.p_prime(z1) / (lat.p(z1) - lat.p(z2));
    CHECK(std::abs(lhs - rhs) < 1e-10 * (1 + std::abs(rhs)));
  }
}

TEST_CASE("P is real on the fundamental rectangle boundary") {
  RectLattice lat = compute_lattice({7.3, 1.1});
  for (int i = 1; i < 60; ++i) {
    double t = i / 60.0;
    // bottom edge (0, om1], right edge om1 + i t om2, top edge, left edge
    cplx zs[4] = {cplx(t * lat.om1, 0), cplx(lat.om1, t * lat.om2_im),
                  cplx(t * lat.om1, lat.om2_im), cplx(0, std::fmax(t, 0.02) * lat.om2_im)};
    for (cplx z : zs) {
      if (lat.lattice_distance(z) < 1e-2) continue;
      CHECK(std::fabs(lat.p(z).imag()) < 1e-11 * (1 + std::abs(lat.p(z))));
    }
  }
}

TEST_CASE("conjugation symmetry for the real lattice") {
  RectLattice lat = compute_lattice({2.2, -0.4});
  cplx z(0.4, 0.75);
  CHECK(std::abs(lat.p(std::conj(z)) - std::conj(lat.p(z))) < 1e-12);
}

TEST_CASE("rejects non-rectangular invariants and pole-adjacent arguments") {
  CHECK_THROWS_AS((void)compute_lattice({1.0, 2.0}), Error);  // delta_mod < 0
  RectLattice lat = compute_lattice({4.0, 0.0});
  CHECK_THROWS_AS((void)lat.p(cplx(1e-9, 0)), Error);
  CHECK_THROWS_AS((void)lat.p(2.0 * lat.om1 + cplx(1e-9, 1e-9)), Error);
}

TEST_CASE("eta1 via Legendre on the lemniscatic lattice (eta1 om1 = pi/4)") {
  RectLattice lat = lemniscatic();
  CHECK(lat.eta1 * lat.om1 == doctest::Approx(kPi / 4).epsilon(1e-13));
}
