#include "annuli/surface.hpp"

#include <cmath>

#include "annuli/error.hpp"
#include "annuli/quadrature.hpp"
#include "annuli/rootfind.hpp"
#include "annuli/threadpool.hpp"

namespace annuli {

namespace {
constexpr double kPi = 3.14159265358979323846;

// complex triple with just enough algebra for the adaptive quadrature
struct C3 {
  cplx a, b, c;
  C3 operator+(const C3& o) const { return {a + o.a, b + o.b, c + o.c}; }
  C3 operator-(const C3& o) const { return {a - o.a, b - o.b, c - o.c}; }
  C3& operator+=(const C3& o) { a += o.a; b += o.b; c += o.c; return *this; }
  C3 operator*(cplx s) const { return {a * s, b * s, c * s}; }
};
inline C3 operator*(double w, const C3& v) { return {v.a * w, v.b * w, v.c * w}; }
inline double abs(const C3& v) { return std::abs(v.a) + std::abs(v.b) + std::abs(v.c); }

// Phi = ((A-B)/2, i(A+B)/2, phi) packed as C3
C3 weier_phi3(const WeierstrassData& d, cplx z) {
  cplx ph = d.phi(z);
  cplx g = d.g(z);
  cplx A = ph / g, B = ph * g;
  return {0.5 * (A - B), cplx(0, 0.5) * (A + B), ph};
}

Vec3 re3(const C3& v) { return {v.a.real(), v.b.real(), v.c.real()}; }

// Re of the integral of Phi along the straight segment [z0, z1]
C3 integrate_phi3(const WeierstrassData& d, cplx z0, cplx z1, double rel_tol) {
  if (std::abs(z1 - z0) < 1e-300) return {0, 0, 0};
  auto f = [&](cplx z) { return weier_phi3(d, z); };
  return gl_adaptive_segment(f, z0, z1, C3{0, 0, 0}, rel_tol, 22, 1.0);
}

Vec3 normal_from_g(cplx g) {
  double ag = std::abs(g);
  if (ag <= 1.0) {
    double den = 1 + ag * ag;
    return {2 * g.real() / den, 2 * g.imag() / den, (ag * ag - 1) / den};
  }
  cplx w = 1.0 / g;
  double aw = std::abs(w);
  double den = 1 + aw * aw;
  return {2 * w.real() / den, -2 * w.imag() / den, (1 - aw * aw) / den};
}

}  // namespace

cplx WeierstrassData::phi(cplx z) const { return sp.b - 4.0 * sp.lattice.p(z + sp.lattice.om1); }

cplx WeierstrassData::phi_prime(cplx z) const {
  return -4.0 * sp.lattice.p_prime(z + sp.lattice.om1);
}

cplx WeierstrassData::g(cplx z) const {
  cplx w = z + sp.lattice.om1;
  return g0 * std::exp(-2.0 * zeta_mu * w) * sp.lattice.sigma(mu + w) / sp.lattice.sigma(mu - w);
}

cplx WeierstrassData::g_quadrature(cplx z) const {
  auto f = [&](cplx w) -> cplx { return 1.0 / phi(w); };
  cplx u(z.real(), 0);
  cplx acc = gl_adaptive_segment(f, cplx(0, 0), u, cplx(0, 0), 1e-13, 22, 1.0);
  acc += gl_adaptive_segment(f, u, z, cplx(0, 0), 1e-13, 22, 1.0);
  return g_hat0 * std::exp(acc);
}

double WeierstrassData::eomega(cplx z) const {
  cplx ph = phi(z);
  cplx gg = g(z);
  cplx A = ph / gg, B = ph * gg;
  return 0.5 * (std::abs(A) + std::abs(B));
}

double WeierstrassData::omega_u(cplx z) const {
  cplx ph = phi(z);
  double ag = std::abs(g(z));
  double n3 = (ag * ag - 1) / (ag * ag + 1);
  return (phi_prime(z) / ph).real() + n3 * (1.0 / ph).real();
}

double WeierstrassData::int_phi_axis(double u) const {
  if (u == 0) return 0;
  const RectLattice& L = sp.lattice;
  cplx zu(u, 0);
  cplx val = sp.b * zu + 4.0 * L.zeta(zu) + 2.0 * L.p_prime(zu) / (L.p(zu) - L.e1);
  return val.real();
}

double WeierstrassData::kappa_contour(const Tolerances& tol) const {
  auto f = [&](cplx z) -> cplx { return 1.0 / phi(z); };
  cplx top(0, 2 * sp.lattice.om2_im);
  cplx I = gl_adaptive_segment(f, cplx(0, 0), top, cplx(0, 0),
                               std::fmax(tol.precision * 0.1, 1e-14), 24, 1.0);
  // kappa = (-1/(2 pi i)) \int = (-1/(2 pi)) \int_0^{2 w2im} dy / phi(iy)
  cplx kap = I / cplx(0, -2 * kPi);
  return kap.real();
}

WeierstrassData build_data(const SpectralParams& sp, double g_hat0, const Tolerances& tol) {
  if (!(g_hat0 > 0)) fail(ErrorKind::DomainError, "g_hat0 must be positive");
  WeierstrassData d;
  d.sp = sp;
  d.g_hat0 = g_hat0;
  const RectLattice& L = sp.lattice;
  auto f = [&](double x) { return 4 * (L.p(cplx(x, L.om2_im))).real() - sp.b; };
  double lo = L.om1 * 1e-9, hi = L.om1 * (1 - 1e-9);
  if (!(f(lo) < 0 && f(hi) > 0))
    fail(ErrorKind::MuNotFound, "P is not bracketing b/4 along om2 .. om1+om2");
  d.mu_x = brent(f, lo, hi, tol.root_tol * L.om1);
  d.mu = cplx(d.mu_x, L.om2_im);
  d.zeta_mu = L.zeta(d.mu);
  cplx w = -g_hat0 * std::exp(2.0 * (L.om1 * d.zeta_mu - d.mu * L.eta1));
  if (std::abs(w.imag()) > 1e-8 * std::abs(w))
    fail(ErrorKind::MuNotFound, "g0 is not real: inconsistent mu");
  d.g0 = w.real();
  return d;
}

ImmersionSample eval_immersion(const WeierstrassData& data, cplx z, const Tolerances& tol) {
  double om1 = data.sp.lattice.om1;
  if (std::fabs(z.real()) >= om1 - tol.pole_guard)
    fail(ErrorKind::PoleProximity, "Re z too close to the phi poles at +-om1");
  cplx u(z.real(), 0);
  C3 acc = integrate_phi3(data, cplx(0, 0), u, tol.precision);
  acc += integrate_phi3(data, u, z, tol.precision);
  ImmersionSample s;
  s.psi = re3(acc);
  s.normal = normal_from_g(data.g(z));
  s.conf = data.eomega(z);
  return s;
}

void extract_ab(const WeierstrassData& data, double u, double& alpha, double& beta,
                const Tolerances&) {
  double w2 = data.sp.lattice.om2_im;
  const double fracs[3] = {0.5, 1.0 / 3.0, 0.2};
  for (int attempt = 0; attempt < 3; ++attempt) {
    double v0 = w2 * fracs[attempt];
    cplx z0(u, 0), z1(u, v0);
    double e0 = data.eomega(z0), e1 = data.eomega(z1);
    if (std::fabs(e0 - e1) < 1e-9 * (e0 + e1)) continue;  // degenerate v0, retry
    double wu0 = data.omega_u(z0), wu1 = data.omega_u(z1);
    alpha = 2 * (wu0 * e0 - wu1 * e1) / (e0 * e0 - e1 * e1);
    beta = 2 * (wu0 / e0 - wu1 / e1) / (1 / (e0 * e0) - 1 / (e1 * e1));
    return;
  }
  fail(ErrorKind::DegenerateV0, "omega(u,0) = omega(u,v0) for all fallback v0");
}

double c3_at_beta_zero(const WeierstrassData& data, double tau) {
  cplx zt(tau, 0);
  double g = data.g(zt).real();
  double ph = data.phi(zt).real();
  double php = data.phi_prime(zt).real();
  return data.int_phi_axis(tau) -
         (1 + g * g) * ph * ph / ((1 + g * g) * php + g * g - 1);
}

double c3_of(const WeierstrassData& data, double u, const Tolerances& tol) {
  double a, b;
  extract_ab(data, u, a, b, tol);
  double g = data.g(cplx(u, 0)).real();
  return data.int_phi_axis(u) + (4 / a) * (g / (1 + g * g)) -
         (b / a) * ((g * g - 1) / (g * g + 1));
}

namespace {
SphereRecord make_record(const WeierstrassData& data, double u, double psi1,
                         const Tolerances& tol) {
  SphereRecord r;
  r.u = u;
  extract_ab(data, u, r.alpha, r.beta, tol);
  r.radius = std::sqrt(4 + r.beta * r.beta) / std::fabs(r.alpha);
  r.theta = std::atan2(2.0, r.beta);
  double g = data.g(cplx(u, 0)).real();
  double den = 1 + g * g;
  r.c3 = data.int_phi_axis(u) + (4 / r.alpha) * (g / den) -
         (r.beta / r.alpha) * ((g * g - 1) / den);
  double c1 = psi1 - (2 / r.alpha) * ((g * g - 1) / den) - (r.beta / r.alpha) * (2 * g / den);
  r.center = {c1, 0.0, r.c3};
  return r;
}
}  // namespace

SphereRecord extract_record(const WeierstrassData& data, double u, const Tolerances& tol) {
  // psi1(u, 0) by quadrature along the axis
  auto f = [&](cplx z) -> cplx {
    cplx ph = data.phi(z), g = data.g(z);
    return 0.5 * (ph / g - ph * g);
  };
  cplx I = gl_adaptive_segment(f, cplx(0, 0), cplx(u, 0), cplx(0, 0), tol.precision, 22, 1.0);
  return make_record(data, u, I.real(), tol);
}

std::vector<SphereRecord> extract_family(const WeierstrassData& data,
                                         const std::vector<double>& us,
                                         const Tolerances& tol) {
  std::vector<SphereRecord> out;
  out.reserve(us.size());
  auto f = [&](cplx z) -> cplx {
    cplx ph = data.phi(z), g = data.g(z);
    return 0.5 * (ph / g - ph * g);
  };
  double prev_u = 0;
  cplx acc(0, 0);
  for (double u : us) {
    acc += gl_adaptive_segment(f, cplx(prev_u, 0), cplx(u, 0), cplx(0, 0), tol.precision, 22,
                               1.0);
    prev_u = u;
    out.push_back(make_record(data, u, acc.real(), tol));
  }
  return out;
}

SurfaceChart build_chart(const WeierstrassData& data, double u_max, int periods, int nu,
                         int nv_per_period, const Tolerances& tol, int threads) {
  const RectLattice& L = data.sp.lattice;
  if (u_max >= L.om1 - tol.pole_guard)
    fail(ErrorKind::PoleProximity, "u_max reaches the phi poles at +-om1");
  if (nu < 3 || nv_per_period < 4) fail(ErrorKind::GridTooCoarse, "chart grid too small");
  if (nu % 2 == 0)
    fail(ErrorKind::GridTooCoarse, "nu must be odd so the central line u = 0 is on the grid");
  SurfaceChart ch;
  ch.periods = periods;
  ch.r1 = data.sp.r1;
  ch.r2 = data.sp.r2;
  ch.g_hat0 = data.g_hat0;
  int nv = periods * nv_per_period + 1;
  double v_len = periods * 2 * L.om2_im;
  ch.u_grid.resize(nu);
  for (int i = 0; i < nu; ++i) ch.u_grid[i] = -u_max + 2 * u_max * i / (nu - 1);
  if (nu % 2 == 1) ch.u_grid[(nu - 1) / 2] = 0.0;
  ch.v_grid.resize(nv);
  for (int j = 0; j < nv; ++j) ch.v_grid[j] = v_len * j / (nv - 1);
  ch.psi.resize(static_cast<std::size_t>(nu) * nv);
  ch.normal.resize(ch.psi.size());
  ch.conf.resize(ch.psi.size());

  // cumulative along the real axis first (sequential, cheap)
  std::vector<Vec3> base(nu);
  {
    int mid = 0;
    while (mid + 1 < nu && ch.u_grid[mid] < 0) ++mid;  // first index with u >= 0
    // integrate outward from 0 in both directions
    std::vector<Vec3> tmp(nu);
    C3 a{0, 0, 0};
    double prev = 0;
    for (int i = mid; i < nu; ++i) {
      a += integrate_phi3(data, cplx(prev, 0), cplx(ch.u_grid[i], 0), tol.precision);
      tmp[i] = re3(a);
      prev = ch.u_grid[i];
    }
    a = C3{0, 0, 0};
    prev = 0;
    for (int i = mid - 1; i >= 0; --i) {
      a += integrate_phi3(data, cplx(prev, 0), cplx(ch.u_grid[i], 0), tol.precision);
      tmp[i] = re3(a);
      prev = ch.u_grid[i];
    }
    base = std::move(tmp);
  }

  parallel_for(nu, [&](int iu) {
    double u = ch.u_grid[iu];
    C3 acc{0, 0, 0};
    double prev_v = 0;
    for (int iv = 0; iv < nv; ++iv) {
      double v = ch.v_grid[iv];
      if (iv > 0) {
        acc += integrate_phi3(data, cplx(u, prev_v), cplx(u, v), tol.precision);
        prev_v = v;
      }
      int id = ch.index(iu, iv);
      ch.psi[id] = base[iu] + re3(acc);
      cplx z(u, v);
      ch.normal[id] = normal_from_g(data.g(z));
      ch.conf[id] = data.eomega(z);
    }
  }, threads);
  return ch;
}

void transform_chart(SurfaceChart& chart, const Vec3& translate, double scale) {
  for (auto& p : chart.psi) p = (p + translate) * scale;
}

}  // namespace annuli
