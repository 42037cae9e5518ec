#pragma once

#include <string>
#include <vector>

#include "annuli/config.hpp"
#include "annuli/period.hpp"
#include "annuli/surface.hpp"
#include "annuli/verify.hpp"

namespace annuli {

struct HeightSample {
  double r1 = 0, r2 = 0;
  double tau = 0;
  double h_value = 0;  // -c3(tau)
};

// Height map on Omega_0 with g_hat0 = 1: tau from the Hamiltonian flow
// (cross-checked against the surface-side beta), then -c3(tau) closed form.
HeightSample height(double r1, double r2, const Tolerances& tol = {});

enum class AnnulusKind { FreeBoundary, Capillary, Strip };

struct AnnulusSolution {
  double r1 = 0, r2 = 0;
  int m = 0, n = 0;            // period m/n (irreducible); 0/0 for strips
  double period_value = 0;     // Per(r1, r2)
  AnnulusKind kind = AnnulusKind::FreeBoundary;
  double tau_or_ustar = 0;     // boundary parameter
  double sphere_radius = 0;    // boundary sphere radius before normalization
  double boundary_angle = 0;   // constant intersection angle (pi/2 for free boundary)
  Vec3 translate;              // ball normalization: x -> (x + translate) * scale
  double scale = 1;
  bool compact = true;         // false for irrational-period strips
  SurfaceChart chart;          // after normalization
  VerificationReport report;
};

// Search state reported when the sign scan along a level curve fails.
struct SignScanProfile {
  std::vector<double> d;            // r1 - r2 samples
  std::vector<double> beta_ustar;   // beta at the c3 = 0 parameter
};

// Free boundary annulus of period m/n: traces Per^{-1}(m/n) from the diagonal,
// locates the sign change of beta(u*) (c3(u*) = 0) in d = r1 - r2, bisects to
// the height zero, builds the n-period chart and normalizes it into the ball.
AnnulusSolution solve_free_boundary(int m, int n, const JobConfig& cfg = {});

// Capillary annulus on Per^{-1}(1/n) at position d = r1 - r2 <= 0; d = 0 is
// the rotational (catenoid) member of the family.
AnnulusSolution build_capillary(int n, double d, const JobConfig& cfg = {});

// Free-boundary strip of (generally irrational) period level c: same height
// zero as solve_free_boundary, but the chart spans `periods` lattice periods
// without a closure requirement and is flagged non-compact.
AnnulusSolution build_strip(double c, int periods, const JobConfig& cfg = {});

// beta at the u* with c3(u*) = 0 for the level point on r1 - r2 = d; used by
// the free-boundary search and exposed for diagnostics.
double beta_at_ustar(double c, double d, double& sg_hint, const JobConfig& cfg);

}  // namespace annuli
