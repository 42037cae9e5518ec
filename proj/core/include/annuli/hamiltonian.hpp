#pragma once

#include <vector>

#include "annuli/config.hpp"
#include "annuli/params.hpp"

namespace annuli {

// State of the autonomous system
//   alpha'' = delta alpha - 2 alpha^2 beta
//   beta''  = delta beta  - 2 alpha beta^2 - 2 alpha
struct AbState {
  double u = 0;
  double alpha = 0, beta = 0, alpha_prime = 0, beta_prime = 0;
};

// First integrals of the system (h and 4k).
double ham_h(const AbState& y, double delta);
double ham_k4(const AbState& y, double delta);

// Dense-output trajectory from the embedded Dormand-Prince pair. Step
// acceptance is keyed to the local error estimate AND to the drift of the
// conserved quantities h, k.
class AbTrajectory {
 public:
  AbState eval(double u) const;
  double beta(double u) const { return eval(u).beta; }
  double alpha(double u) const { return eval(u).alpha; }

  double u_begin() const { return steps_.empty() ? 0 : steps_.front().u0; }
  double u_end() const { return steps_.empty() ? 0 : steps_.back().u0 + steps_.back().h; }
  double max_drift_h() const { return drift_h_; }
  double max_drift_k() const { return drift_k_; }
  double h0() const { return h0_; }
  double k0() const { return k0_; }

  struct Step {
    double u0, h;
    double rcont[5][4];  // dense-output coefficients per component
  };
  const std::vector<Step>& steps() const { return steps_; }

 private:
  friend AbTrajectory integrate_ab(const SpectralParams&, const AbState&, double,
                                   const Tolerances&);
  std::vector<Step> steps_;
  double h0_ = 0, k0_ = 0, drift_h_ = 0, drift_k_ = 0;
};

AbTrajectory integrate_ab(const SpectralParams& sp, const AbState& init, double u_end,
                          const Tolerances& tol = {});

enum class PhaseTag { R_plus, R_minus };

struct StOrbitSample {
  double lambda = 0;
  double u = 0;
  double s = 0, t = 0;
  PhaseTag tag = PhaseTag::R_plus;
};

struct StOrbit {
  std::vector<StOrbitSample> samples;
  bool vertex_hit = false;       // orbit passed within tolerance of (r3, r2)
  double min_vertex_dist = 0;
};

// The distinguished orbit with alpha(0) = beta(0) = 0, alpha'(0) = 1,
// mapped to (s,t) via alpha beta = s + t, alpha^2 = -st. Samples start where
// ||(s,t)|| reaches the seed norm and lambda is measured from there.
StOrbit trace_orbit_gamma0(const SpectralParams& sp, const Tolerances& tol = {},
                           int samples = 2048);

struct TauResult {
  double tau = 0;
  double alpha_tau = 0;
};

// Smallest u > 0 with beta(u) = 0 for the Gamma_0 initial data. Requires
// (r1, r2) in Omega_0.
TauResult find_tau(const SpectralParams& sp, const Tolerances& tol = {});

// ----- degenerate (r1 = r2 = r) closed forms -----

// H(x) with -ln H a primitive of 1/(x sqrt(q(x))) for the double-root cubic.
double degenerate_H(double x, double r);
double degenerate_F(double x, double r);  // H(x) H(-x)
double degenerate_G(double x, double r);  // H(x) / H(-x)
double theta_fn(double x);                // -(3+2 sqrt 2) ((s-sqrt2)/(s+sqrt2))^{1/s}, s = sqrt(1-x^3)

struct DegenerateProfile {
  double r = 0;
  double alpha_hat = 0;  // diagonal crossing of Gamma_0, in (0, 1/r^2]
  double tau_r = 0;      // u-parameter of the crossing
  double h_diag = 0;     // diagonal height -r^2 (T - coth T), T = tau_r / r
};

DegenerateProfile degenerate_profile(double r, const Tolerances& tol = {});

double solve_r_sharp(const Tolerances& tol = {});  // root of theta(x) = -1
double solve_r_star(const Tolerances& tol = {});   // root of h_diag on [r_sharp, -1]
double coth_fixed_point();                          // negative root of x = coth x

}  // namespace annuli
