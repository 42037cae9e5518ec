#include "annuli/hamiltonian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "annuli/error.hpp"
#include "annuli/rootfind.hpp"

namespace annuli {

double ham_h(const AbState& y, double delta) {
  return y.alpha_prime * y.beta_prime + y.alpha * y.alpha -
         delta * y.alpha * y.beta + y.alpha * y.alpha * y.beta * y.beta;
}

double ham_k4(const AbState& y, double delta) {
  double w = y.alpha * y.beta_prime - y.alpha_prime * y.beta;
  return w * w + 4 * y.alpha_prime * y.alpha_prime +
         4 * y.alpha * y.alpha * y.alpha * y.beta - 4 * delta * y.alpha * y.alpha;
}

namespace {

using V4 = std::array<double, 4>;

inline V4 rhs(const V4& y, double delta) {
  double a = y[0], b = y[1];
  return {y[2], y[3], delta * a - 2 * a * a * b, delta * b - 2 * a * b * b - 2 * a};
}

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// dense output
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

inline AbState to_state(double u, const V4& y) {
  return {u, y[0], y[1], y[2], y[3]};
}

}  // namespace

AbState AbTrajectory::eval(double u) const {
  if (steps_.empty()) fail(ErrorKind::StepFailure, "empty trajectory");
  // binary search for the step containing u (clamped to the covered range)
  std::size_t lo = 0, hi = steps_.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi + 1) / 2;
    if (steps_[mid].u0 <= u) lo = mid;
    else hi = mid - 1;
  }
  const Step& st = steps_[lo];
  double th = (u - st.u0) / st.h;
  th = std::fmin(1.0, std::fmax(0.0, th));
  double om = 1 - th;
  AbState out;
  out.u = u;
  double* vals[4] = {&out.alpha, &out.beta, &out.alpha_prime, &out.beta_prime};
  for (int i = 0; i < 4; ++i) {
    // rcont1 + th*(rcont2 + om*(rcont3 + th*(rcont4 + om*rcont5)))
    *vals[i] = st.rcont[0][i] +
               th * (st.rcont[1][i] +
                     om * (st.rcont[2][i] + th * (st.rcont[3][i] + om * st.rcont[4][i])));
  }
  return out;
}

AbTrajectory integrate_ab(const SpectralParams& sp, const AbState& init, double u_end,
                          const Tolerances& tol) {
  const double delta = sp.delta;
  AbTrajectory tr;
  tr.h0_ = ham_h(init, delta);
  tr.k0_ = ham_k4(init, delta) / 4;
  // the initial data must realize the sp-invariants
  double sh = std::fmax(1.0, std::fabs(sp.h));
  if (std::fabs(tr.h0_ - sp.h) > 1e-6 * sh || std::fabs(tr.k0_ - sp.k) > 1e-6)
    fail(ErrorKind::DomainError, "initial data violates the (h, k) invariants");

  const double rtol = std::fmax(tol.precision, 1e-13), atol = rtol;
  const double drift_budget = tol.ode_drift;
  double u = init.u;
  V4 y = {init.alpha, init.beta, init.alpha_prime, init.beta_prime};
  V4 k1 = rhs(y, delta);
  double span = u_end - init.u;
  if (span <= 0) fail(ErrorKind::DomainError, "u_end must exceed the initial u");
  double h = span / 100;
  const double hmin = span * 1e-14;
  tr.steps_.reserve(256);

  while (u < u_end) {
    h = std::fmin(h, u_end - u);
    V4 k2, k3, k4, k5, k6, k7, y5;
    auto stage = [&](const V4& base) { return rhs(base, delta); };
    V4 t;
    for (int i = 0; i < 4; ++i) t[i] = y[i] + h * a21 * k1[i];
    k2 = stage(t);
    for (int i = 0; i < 4; ++i) t[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    k3 = stage(t);
    for (int i = 0; i < 4; ++i) t[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    k4 = stage(t);
    for (int i = 0; i < 4; ++i)
      t[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    k5 = stage(t);
    for (int i = 0; i < 4; ++i)
      t[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    k6 = stage(t);
    for (int i = 0; i < 4; ++i)
      y5[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
    k7 = stage(y5);

    double errn = 0;
    for (int i = 0; i < 4; ++i) {
      double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                      e7 * k7[i]);
      double sc = atol + rtol * std::fmax(std::fabs(y[i]), std::fabs(y5[i]));
      errn = std::fmax(errn, std::fabs(e) / sc);
    }
    AbState cand = to_state(u + h, y5);
    double dh = std::fabs(ham_h(cand, delta) - tr.h0_) / sh;
    double dk = std::fabs(ham_k4(cand, delta) / 4 - tr.k0_);
    bool conserve_ok = dh <= drift_budget && dk <= drift_budget;

    if (errn <= 1.0 && conserve_ok) {
      AbTrajectory::Step st;
      st.u0 = u;
      st.h = h;
      for (int i = 0; i < 4; ++i) {
        double ydiff = y5[i] - y[i];
        double bspl = h * k1[i] - ydiff;
        st.rcont[0][i] = y[i];
        st.rcont[1][i] = ydiff;
        st.rcont[2][i] = bspl;
        st.rcont[3][i] = ydiff - h * k7[i] - bspl;
        st.rcont[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                              d6 * k6[i] + d7 * k7[i]);
      }
      tr.steps_.push_back(st);
      u += h;
      y = y5;
      k1 = k7;  // FSAL
      tr.drift_h_ = std::fmax(tr.drift_h_, dh);
      tr.drift_k_ = std::fmax(tr.drift_k_, dk);
      double fac = 0.9 * std::pow(std::fmax(errn, 1e-10), -0.2);
      h *= std::fmin(5.0, std::fmax(0.2, fac));
    } else {
      if (h <= hmin)
        fail(ErrorKind::ConservationBreach,
             conserve_ok ? "step control stalled at minimum step"
                         : "conserved-quantity drift irreparable at minimum step");
      double fac = errn > 1.0 ? 0.9 * std::pow(errn, -0.2) : 0.5;
      h *= std::fmax(0.1, fac);
    }
  }
  return tr;
}

namespace {

struct StPoint {
  double s, t, sd, td;  // values and u-derivatives
};

StPoint st_from_ab(const AbState& y) {
  double w = y.alpha * y.beta;                     // s + t
  double a2 = y.alpha * y.alpha;                   // -s t
  double rho = std::sqrt(w * w + 4 * a2);          // s - t  (s>0>t)
  StPoint p;
  p.s = 0.5 * (w + rho);
  p.t = 0.5 * (w - rho);
  double wd = y.alpha_prime * y.beta + y.alpha * y.beta_prime;
  double rhod = rho > 0 ? (w * wd + 4 * y.alpha * y.alpha_prime) / rho : 0;
  p.sd = 0.5 * (wd + rhod);
  p.td = 0.5 * (wd - rhod);
  return p;
}

}  // namespace

StOrbit trace_orbit_gamma0(const SpectralParams& sp, const Tolerances& tol, int samples) {
  // alpha'(0) = 1, beta'(0) = h realizes k = 1, h = q'(0).
  AbState init{0, 0, 0, 1, sp.h};
  double u_max = sp.lattice.om1 * (1 - 1e-9);
  AbTrajectory tr = integrate_ab(sp, init, u_max, tol);

  const double seed_norm = 1e-8;
  // ||(s,t)|| ~ sqrt(2) u near 0
  double u_seed = seed_norm / std::sqrt(2.0);

  StOrbit orb;
  orb.samples.reserve(samples);
  orb.min_vertex_dist = std::numeric_limits<double>::infinity();
  double lambda = 0;
  double u_prev = u_seed;
  StPoint p_prev = st_from_ab(tr.eval(u_seed));
  // logistic spacing in u: geometric near both endpoints, where the
  // lambda-parametrization compresses logarithmically
  double x_lo = std::log(u_seed / (u_max - u_seed));
  for (int i = 0; i < samples; ++i) {
    double x = x_lo + (-2 * x_lo) * (i / double(samples - 1));
    double u = u_max / (1 + std::exp(-x));
    StPoint p = st_from_ab(tr.eval(u));
    if (i > 0) {
      // d lambda = 2 du / (s - t), trapezoidal on the sample grid
      double f0 = 2.0 / (p_prev.s - p_prev.t);
      double f1 = 2.0 / (p.s - p.t);
      lambda += 0.5 * (f0 + f1) * (u - u_prev);
    }
    StOrbitSample smp;
    smp.lambda = lambda;
    smp.u = u;
    smp.s = p.s;
    smp.t = p.t;
    smp.tag = (p.sd * p.td < 0) ? PhaseTag::R_plus : PhaseTag::R_minus;
    orb.samples.push_back(smp);
    double dv = std::hypot(p.s - sp.r3, p.t - sp.r2);
    orb.min_vertex_dist = std::fmin(orb.min_vertex_dist, dv);
    u_prev = u;
    p_prev = p;
  }
  double scale = std::fmax(sp.r3, -sp.r2);
  orb.vertex_hit = orb.min_vertex_dist < 1e-6 * scale;
  return orb;
}

TauResult find_tau(const SpectralParams& sp, const Tolerances& tol) {
  DomainClass dc = classify_domain(sp.r1, sp.r2, tol);
  if (dc.tag != DomainTag::Omega0)
    fail(ErrorKind::NotOmega0, "find_tau requires (r1, r2) in Omega_0");

  AbState init{0, 0, 0, 1, sp.h};
  double u_max = sp.lattice.om1 * (1 - 1e-9);
  AbTrajectory tr = integrate_ab(sp, init, u_max, tol);

  // geometric scan from small u upward; beta ~ h u > 0 initially
  const int n = 512;
  double u_lo = u_max * 1e-6;
  double ratio = std::pow(u_max / u_lo, 1.0 / (n - 1));
  double prev_u = u_lo;
  double prev_b = tr.beta(u_lo);
  double found_lo = 0, found_hi = 0;
  double uu = u_lo;
  for (int i = 1; i < n; ++i) {
    uu *= ratio;
    double b = tr.beta(std::fmin(uu, u_max));
    if ((b > 0) != (prev_b > 0)) {
      found_lo = prev_u;
      found_hi = std::fmin(uu, u_max);
      break;
    }
    prev_u = uu;
    prev_b = b;
  }
  if (found_hi == 0)
    fail(ErrorKind::NoBracket, "no sign change of beta located before u_max");
  double tau = brent([&](double u) { return tr.beta(u); }, found_lo, found_hi, tol.root_tol);
  // alpha and beta must not vanish on (0, tau)
  for (int i = 1; i < 64; ++i) {
    double u = tau * i / 64.0;
    AbState s = tr.eval(u);
    if (s.alpha <= 0 || s.beta <= 0)
      fail(ErrorKind::RootFailure, "alpha or beta vanishes before the located tau");
  }
  return {tau, tr.alpha(tau)};
}

// ----- degenerate closed forms -----

double degenerate_H(double x, double r) {
  // domain x <= 1/r^2; clamp the radicand against endpoint roundoff
  double s1 = std::sqrt(std::fmax(0.0, 1 - x * r * r));
  double s2 = std::sqrt(1 - r * r * r);
  return (1 + s1) / (1 - s1) * std::pow((s2 - s1) / (s2 + s1), 1 / s2);
}

double degenerate_F(double x, double r) { return degenerate_H(x, r) * degenerate_H(-x, r); }
double degenerate_G(double x, double r) { return degenerate_H(x, r) / degenerate_H(-x, r); }

double theta_fn(double x) {
  double s = std::sqrt(1 - x * x * x);
  double rt2 = std::sqrt(2.0);
  return -(3 + 2 * rt2) * std::pow((s - rt2) / (s + rt2), 1 / s);
}

double solve_r_sharp(const Tolerances& tol) {
  double lo = -std::cbrt(2.0) + 1e-11, hi = -1 - 1e-11;
  return brent([](double x) { return theta_fn(x) + 1; }, lo, hi, tol.root_tol * 1e2);
}

double coth_fixed_point() {
  return brent([](double x) { return x - 1 / std::tanh(x); }, -3.0, -1.0, 1e-15);
}

DegenerateProfile degenerate_profile(double r, const Tolerances& tol) {
  const double cbrt2 = std::cbrt(2.0);
  if (!(r > -cbrt2 && r <= -1))
    fail(ErrorKind::OutOfRange, "degenerate profile requires r in (-cbrt(2), -1]");
  static const double r_sharp = solve_r_sharp();
  DegenerateProfile out;
  out.r = r;
  double hi = 1 / (r * r);
  const double asinh1 = std::log(1 + std::sqrt(2.0));
  if (r >= r_sharp) {
    // F increasing from -inf to theta(r) >= -1; root may sit at the endpoint
    if (degenerate_F(hi * (1 - 1e-12), r) + 1 <= 0) {
      out.alpha_hat = hi;
    } else {
      out.alpha_hat =
          brent([&](double x) { return degenerate_F(x, r) + 1; }, 1e-9 * hi,
                hi * (1 - 1e-12), tol.root_tol);
    }
    // crossing happens after the wall bounce: T = tau/r <= -asinh(1)
    double T;
    if (out.alpha_hat >= hi * (1 - 1e-11)) {
      T = -asinh1;
    } else {
      T = brent(
          [&](double t) {
            return -2 * std::sinh(t) / (r * r * std::cosh(t) * std::cosh(t)) - out.alpha_hat;
          },
          -50.0, -asinh1, tol.root_tol);
    }
    out.tau_r = r * T;
    out.h_diag = -r * r * (T - 1 / std::tanh(T));
  } else {
    // G dips below -1 around x_G and recovers by x = 1/r^2; bracket from the
    // sampled minimum (the corner r -> -cbrt(2) makes the dip shallow)
    auto gfun = [&](double x) { return degenerate_G(x, r) + 1; };
    double x_min = std::sqrt(-(2 + r * r * r) / r);
    double f_min = gfun(x_min);
    for (int i = 0; i <= 64; ++i) {
      double x = hi * (i + 0.5) / 65.0;
      double fx = gfun(x);
      if (fx < f_min) { f_min = fx; x_min = x; }
    }
    if (!(f_min < 0))
      fail(ErrorKind::RootFailure, "G never dips below -1 left of r_sharp");
    out.alpha_hat = brent(gfun, x_min, hi, tol.root_tol);
    // crossing happens before the wall: T in (-asinh(1), 0)
    double T = brent(
        [&](double t) {
          return -2 * std::sinh(t) / (r * r * std::cosh(t) * std::cosh(t)) - out.alpha_hat;
        },
        -asinh1, -1e-14, tol.root_tol);
    out.tau_r = r * T;
    out.h_diag = -r * r * (T - 1 / std::tanh(T));
  }
  return out;
}

double solve_r_star(const Tolerances& tol) {
  static const double r_sharp = solve_r_sharp();
  return brent([&](double r) { return degenerate_profile(r, tol).h_diag; },
               r_sharp + 1e-10, -1.0, tol.root_tol * 1e2);
}

}  // namespace annuli
