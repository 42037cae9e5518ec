#pragma once

#include <vector>

#include "annuli/config.hpp"
#include "annuli/linalg.hpp"
#include "annuli/params.hpp"

namespace annuli {

// Weierstrass data (phi, g) of the surface family:
//   phi(z) = b - 4 P(z + om1),        g/g' = phi,  g(0) = g_hat0,
// with g in closed sigma/zeta form. mu = mu_x + om2 satisfies 4 P(mu) = b,
// P'(mu) = 1/4.
struct WeierstrassData {
  SpectralParams sp;
  double g_hat0 = 1.0;
  double mu_x = 0;        // mu = mu_x + om2, mu_x in (0, om1)
  cplx mu;
  cplx zeta_mu;
  double g0 = 0;          // sigma-quotient normalization making g(0) = g_hat0

  cplx phi(cplx z) const;
  cplx phi_prime(cplx z) const;
  cplx g(cplx z) const;          // closed form
  cplx g_quadrature(cplx z) const;  // direct integration of g/g' = phi (oracle route)
  cplx weier_A(cplx z) const { return phi(z) / g(z); }
  cplx weier_B(cplx z) const { return phi(z) * g(z); }

  double eomega(cplx z) const;   // conformal factor e^omega
  double omega_u(cplx z) const;  // analytic u-derivative of omega

  // \int_0^u phi on the real axis, closed form b u + 4 zeta(u) + 2 P'(u)/(P(u)-e1)
  double int_phi_axis(double u) const;

  // closure indicator kappa by contour quadrature of 1/phi along [0, 2 om2]
  double kappa_contour(const Tolerances& tol = {}) const;
};

WeierstrassData build_data(const SpectralParams& sp, double g_hat0,
                           const Tolerances& tol = {});

struct ImmersionSample {
  Vec3 psi;
  Vec3 normal;
  double conf = 0;
};

// psi(z) = Re \int_0^z Phi along the axis-aligned L-path, with
// Phi = ((A - B)/2, i (A + B)/2, phi), A = phi/g, B = phi g.
ImmersionSample eval_immersion(const WeierstrassData& data, cplx z,
                               const Tolerances& tol = {});

// Per-u record of the sphere containing the curvature line psi(u, .).
struct SphereRecord {
  double u = 0;
  double alpha = 0, beta = 0;
  double radius = 0;   // sqrt(4 + beta^2)/|alpha|
  double theta = 0;    // arctan(2/beta)
  double c3 = 0;
  Vec3 center;
};

// alpha(u), beta(u) from the two-point conformal-factor system at
// (u, 0) and (u, v0); v0 defaults to Im(om2)/2 with /3, /5 fallbacks.
void extract_ab(const WeierstrassData& data, double u, double& alpha, double& beta,
                const Tolerances& tol = {});

SphereRecord extract_record(const WeierstrassData& data, double u,
                            const Tolerances& tol = {});

// One sweep for many u values (shares the cumulative axis integral for psi1).
std::vector<SphereRecord> extract_family(const WeierstrassData& data,
                                         const std::vector<double>& us,
                                         const Tolerances& tol = {});

// c3 at a beta-zero via the elliptic closed form; only valid when beta(tau) = 0.
double c3_at_beta_zero(const WeierstrassData& data, double tau);

// c3(u) via the general center-height formula.
double c3_of(const WeierstrassData& data, double u, const Tolerances& tol = {});

struct SurfaceChart {
  std::vector<double> u_grid;   // ascending, symmetric about 0
  std::vector<double> v_grid;   // ascending from 0 to v_len
  std::vector<Vec3> psi;        // row-major, index = iu * nv + iv
  std::vector<Vec3> normal;
  std::vector<double> conf;
  bool closed_v = false;        // v_len is an exact period of the immersion
  int periods = 0;              // lattice periods covered
  int m = 0, n = 0;             // rational period m/n when set
  double r1 = 0, r2 = 0, g_hat0 = 1;

  int nu() const { return static_cast<int>(u_grid.size()); }
  int nv() const { return static_cast<int>(v_grid.size()); }
  int index(int iu, int iv) const { return iu * nv() + iv; }
  const Vec3& at(int iu, int iv) const { return psi[index(iu, iv)]; }
};

// Samples the immersion on [-u_max, u_max] x [0, periods * 2 Im(om2)].
// nv_total = periods * nv_per_period + 1 so period shifts align with the grid.
SurfaceChart build_chart(const WeierstrassData& data, double u_max, int periods, int nu,
                         int nv_per_period, const Tolerances& tol = {}, int threads = 0);

// Applies x -> (x + translate) * scale to every vertex (normals unchanged).
void transform_chart(SurfaceChart& chart, const Vec3& translate, double scale);

}  // namespace annuli
