#include "annuli/elliptic.hpp"

#include <cmath>

#include "annuli/error.hpp"
#include "annuli/quadrature.hpp"

namespace annuli {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Real roots of 4x^3 - g2 x - g3, descending. delta_mod > 0 guarantees three
// distinct real roots; trigonometric solution of the depressed cubic plus a
// Newton polish per root.
void cubic_roots(double g2, double g3, double& e1, double& e2, double& e3) {
  double p = -g2 / 4, q = -g3 / 4;  // x^3 + p x + q
  double m = 2 * std::sqrt(-p / 3);
  double arg = 3 * q / (p * m);
  arg = std::fmin(1.0, std::fmax(-1.0, arg));
  double t = std::acos(arg) / 3;
  double r0 = m * std::cos(t);
  double r1 = m * std::cos(t - 2 * kPi / 3);
  double r2 = m * std::cos(t - 4 * kPi / 3);
  auto newton = [&](double x) {
    for (int it = 0; it < 4; ++it) {
      double f = 4 * x * x * x - g2 * x - g3;
      double fp = 12 * x * x - g2;
      if (fp == 0) break;
      x -= f / fp;
    }
    return x;
  };
  double hi = std::fmax(r0, std::fmax(r1, r2));
  double lo = std::fmin(r0, std::fmin(r1, r2));
  e1 = newton(hi);
  e3 = newton(lo);
  e2 = newton(r0 + r1 + r2 - hi - lo);
}
}  // namespace

double complete_elliptic_axis(double a, double b, double rel_tol) {
  auto f = [&](cplx th) -> cplx {
    double t = th.real();
    double c = std::cos(t), s = std::sin(t);
    return cplx(1.0 / std::sqrt(a * a * c * c + b * b * s * s), 0.0);
  };
  cplx v = gl_adaptive_segment(f, cplx(0, 0), cplx(kPi / 2, 0), cplx(0, 0), rel_tol, 42);
  return v.real();
}

void ThetaEngine::init(double om1_, double w2im_) {
  om1 = om1_;
  w2im = w2im_;
  q = std::exp(-kPi * w2im / om1);
  terms = 4;
  while (terms < 24 && std::pow(q, terms * terms - 0.25) > 1e-18) ++terms;
  coef.resize(terms);
  double num = 0, den = 0;
  for (int n = 0; n < terms; ++n) {
    double k = 2.0 * n + 1.0;
    double c = (n % 2 ? -1.0 : 1.0) * std::pow(q, (n + 0.5) * (n + 0.5));
    coef[n] = c;
    den += c * k;
    num += c * k * k * k;
  }
  th1p0 = 2 * den;
  eta1 = (kPi * kPi / (12 * om1)) * (num / den);
}

ThetaEngine::Th1 ThetaEngine::th1_all(cplx v) const {
  // sin((2n+1)v), cos((2n+1)v) via the ladder e^{i(2n+1)v} = e^{iv} (e^{2iv})^n
  const cplx i(0, 1);
  cplx w = std::exp(i * v);
  cplx winv = 1.0 / w;
  cplx w2 = w * w, w2inv = winv * winv;
  cplx ek = w, ekinv = winv;  // e^{ikv}, e^{-ikv} for k = 2n+1
  Th1 r{};
  for (int n = 0; n < terms; ++n) {
    double k = 2.0 * n + 1.0;
    cplx s = (ek - ekinv) * cplx(0, -0.5);  // sin(kv)
    cplx c = (ek + ekinv) * 0.5;            // cos(kv)
    double a = coef[n];
    r.t0 += a * s;
    r.t1 += a * k * c;
    r.t2 -= a * k * k * s;
    r.t3 -= a * k * k * k * c;
    ek *= w2;
    ekinv *= w2inv;
  }
  r.t0 *= 2; r.t1 *= 2; r.t2 *= 2; r.t3 *= 2;
  return r;
}

cplx ThetaEngine::p_cell(cplx z) const {
  cplx v = kPi * z / (2 * om1);
  Th1 t = th1_all(v);
  double s = kPi / (2 * om1);
  cplx r = t.t1 / t.t0;
  return -eta1 / om1 - s * s * (t.t2 / t.t0 - r * r);
}

cplx ThetaEngine::p_prime_cell(cplx z) const {
  cplx v = kPi * z / (2 * om1);
  Th1 t = th1_all(v);
  double s = kPi / (2 * om1);
  return -(s * s * s) *
         (t.t3 * t.t0 * t.t0 - 3.0 * t.t2 * t.t1 * t.t0 + 2.0 * t.t1 * t.t1 * t.t1) /
         (t.t0 * t.t0 * t.t0);
}

cplx ThetaEngine::zeta_cell(cplx z) const {
  cplx v = kPi * z / (2 * om1);
  Th1 t = th1_all(v);
  return eta1 * z / om1 + (kPi / (2 * om1)) * t.t1 / t.t0;
}

cplx ThetaEngine::sigma_cell(cplx z) const {
  cplx v = kPi * z / (2 * om1);
  Th1 t = th1_all(v);
  return (2 * om1 / kPi) * std::exp(eta1 * z * z / (2 * om1)) * t.t0 / th1p0;
}

double RectLattice::lattice_distance(cplx z) const {
  double rx = z.real() - 2 * om1 * std::round(z.real() / (2 * om1));
  double ry = z.imag() - 2 * om2_im * std::round(z.imag() / (2 * om2_im));
  return std::hypot(rx, ry);
}

void RectLattice::guard(cplx z) const {
  if (lattice_distance(z) < pole_guard)
    fail(ErrorKind::PoleProximity, "evaluation within guard radius of a lattice point");
}

namespace {
struct Reduced {
  cplx z;
  long m, n;
};
Reduced reduce(cplx z, double om1, double w2im) {
  long m = std::lround(z.real() / (2 * om1));
  long n = std::lround(z.imag() / (2 * w2im));
  return {cplx(z.real() - 2.0 * m * om1, z.imag() - 2.0 * n * w2im), m, n};
}
}  // namespace

cplx RectLattice::p(cplx z) const {
  guard(z);
  if (!swapped_) return eng_.p_cell(reduce(z, om1, om2_im).z);
  cplx iz = cplx(0, 1) * z;
  return -eng_.p_cell(reduce(iz, om2_im, om1).z);
}

cplx RectLattice::p_prime(cplx z) const {
  guard(z);
  if (!swapped_) return eng_.p_prime_cell(reduce(z, om1, om2_im).z);
  cplx iz = cplx(0, 1) * z;
  return -cplx(0, 1) * eng_.p_prime_cell(reduce(iz, om2_im, om1).z);
}

cplx RectLattice::zeta(cplx z) const {
  guard(z);
  if (!swapped_) {
    Reduced r = reduce(z, om1, om2_im);
    return eng_.zeta_cell(r.z) + 2.0 * static_cast<double>(r.m) * eta1 +
           2.0 * static_cast<double>(r.n) * eta2();
  }
  // zeta(z; L) = i zeta(iz; L') with L' the quarter-turn lattice
  cplx iz = cplx(0, 1) * z;
  Reduced r = reduce(iz, om2_im, om1);
  cplx eta1p(eng_.eta1, 0);
  cplx eta2p = (eta1p * cplx(0, om1) - cplx(0, kPi / 2)) / om2_im;  // Legendre on L'
  cplx zl = eng_.zeta_cell(r.z) + 2.0 * static_cast<double>(r.m) * eta1p +
            2.0 * static_cast<double>(r.n) * eta2p;
  return cplx(0, 1) * zl;
}

cplx RectLattice::sigma(cplx z) const {
  if (!swapped_) {
    Reduced r = reduce(z, om1, om2_im);
    cplx base = eng_.sigma_cell(r.z);
    if (r.m == 0 && r.n == 0) return base;
    double sgn = ((r.m + r.n + r.m * r.n) % 2 == 0) ? 1.0 : -1.0;
    cplx etas = 2.0 * static_cast<double>(r.m) * eta1 + 2.0 * static_cast<double>(r.n) * eta2();
    cplx offs = static_cast<double>(r.m) * om1 + static_cast<double>(r.n) * omega2();
    return base * sgn * std::exp(etas * (offs + r.z));
  }
  cplx iz = cplx(0, 1) * z;
  Reduced r = reduce(iz, om2_im, om1);
  cplx eta1p(eng_.eta1, 0);
  cplx eta2p = (eta1p * cplx(0, om1) - cplx(0, kPi / 2)) / om2_im;
  cplx base = eng_.sigma_cell(r.z);
  if (!(r.m == 0 && r.n == 0)) {
    double sgn = ((r.m + r.n + r.m * r.n) % 2 == 0) ? 1.0 : -1.0;
    cplx etas = 2.0 * static_cast<double>(r.m) * eta1p + 2.0 * static_cast<double>(r.n) * eta2p;
    cplx offs = static_cast<double>(r.m) * om2_im + static_cast<double>(r.n) * cplx(0, om1);
    base *= sgn * std::exp(etas * (offs + r.z));
  }
  return -cplx(0, 1) * base;
}

WeierstrassValues RectLattice::eval(cplx z) const {
  return {p(z), p_prime(z), zeta(z), sigma(z)};
}

RectLattice compute_lattice(const LatticeInvariants& inv, const Tolerances& tol) {
  if (!(inv.delta_mod() > 0))
    fail(ErrorKind::NonRectangular, "delta_mod <= 0: not a rectangular lattice");
  RectLattice lat;
  lat.inv = inv;
  lat.pole_guard = tol.pole_guard;
  cubic_roots(inv.g2, inv.g3, lat.e1, lat.e2, lat.e3);
  if (!(lat.e3 < lat.e2 && lat.e2 < lat.e1) || !std::isfinite(lat.e1 + lat.e2 + lat.e3))
    fail(ErrorKind::RootFailure, "branch value isolation failed");
  // om1 = \int_{e1}^inf dx/sqrt(4x^3 - g2 x - g3)      (x = e1 + xi^2)
  lat.om1 = complete_elliptic_axis(std::sqrt(lat.e1 - lat.e2), std::sqrt(lat.e1 - lat.e3),
                                   tol.precision);
  // om2_im = \int_{-inf}^{e3} dx/sqrt(-4x^3 + g2 x + g3)  (x = e3 - xi^2)
  lat.om2_im = complete_elliptic_axis(std::sqrt(lat.e1 - lat.e3), std::sqrt(lat.e2 - lat.e3),
                                      tol.precision);
  lat.swapped_ = lat.om2_im < lat.om1;
  if (!lat.swapped_) {
    lat.eng_.init(lat.om1, lat.om2_im);
    lat.eta1 = lat.eng_.eta1;
  } else {
    lat.eng_.init(lat.om2_im, lat.om1);
    // eta1(L) = i eta2(L'); eta2(L') via the Legendre relation on L'
    lat.eta1 = (kPi / 2 - lat.eng_.eta1 * lat.om1) / lat.om2_im;
  }
  lat.eta2_im = (lat.eta1 * lat.om2_im - kPi / 2) / lat.om1;  // Legendre
  return lat;
}

}  // namespace annuli
