#pragma once

#include <map>
#include <string>
#include <vector>

#include "annuli/config.hpp"
#include "annuli/linalg.hpp"
#include "annuli/surface.hpp"

namespace annuli {

// Algebraic least-squares sphere fit with a plane fallback for coplanar
// inputs (a plane is the infinite-radius case).
struct SphereFit {
  Vec3 center;
  double radius = 0;        // +inf for planes
  double residual = 0;      // max | |p-c| - R | / R, or max plane distance
  bool is_plane = false;
  Vec3 plane_normal;        // unit, for the plane case
  double plane_offset = 0;  // <n, x> = offset
};

SphereFit fit_sphere(const std::vector<Vec3>& points);

// Constrained fit: radius of the best sphere about a known center.
struct RadialFit {
  double radius = 0;
  double residual = 0;
};
RadialFit fit_sphere_through_center(const std::vector<Vec3>& points, const Vec3& center);

struct BoundaryAngleStats {
  double mean = 0;     // mean intersection angle with the fitted boundary sphere
  double max_dev = 0;  // max |angle - mean|
  double orthogonality_residual = 0;  // max |pi/2 - angle|
};

struct VerificationReport {
  double mean_curvature_max = 0;
  double sphere_fit_max_residual = 0;
  BoundaryAngleStats boundary[2];
  double boundary_sphere_radius[2] = {0, 0};
  double boundary_sphere_center_dist[2] = {0, 0};
  double boundary_unit_dist[2] = {0, 0};  // max | |p| - 1 | over the boundary row
  double closure_residual = 0;
  std::map<std::string, double> symmetry_residuals;
  int winding_number = 0;      // |rotation index| of the Gauss map along u = 0
  bool geodesic_convex = false;
  int geodesic_turning = 0;    // tangent winding of the central planar curve
  long self_intersections = -1;  // -1: not probed
  double per_value = 0;
  std::map<std::string, bool> passed;

  bool all_passed() const {
    for (const auto& [k, v] : passed)
      if (!v) return false;
    return true;
  }
};

struct Expectations {
  enum class Kind { FreeBoundary, Capillary, Strip } kind = Kind::FreeBoundary;
  int m = 0, n = 0;            // rational period; n also fixes the rotation group
  double angle = 1.5707963267948966;  // expected constant boundary angle
  bool probe_self_intersection = true;
};

struct VerifyThresholds {
  double boundary_sphere = 1e-7;     // |R-1| and |center| after normalization
  double orthogonality = 1e-5;       // rad
  double angle_dev = 1e-5;           // rad, capillary constancy
  double closure = 1e-8;
  double symmetry = 1e-7;
  double sphere_fit = 1e-6;
  double mean_curvature = 5e-3;      // finite-difference H ceiling at default grids
};

// Representation-agnostic certification: everything is measured from the
// point/normal grid, never from the Weierstrass side.
VerificationReport verify_chart(const SurfaceChart& chart, const Expectations& expect,
                                const VerifyThresholds& thresholds = {},
                                const GridConfig& grid = {});

// ----- analytic oracles -----

// t tanh t = 1
double critical_catenoid_parameter();

// Critical catenoid (free boundary in the unit ball), sampled as a chart.
SurfaceChart critical_catenoid_chart(int nu, int nv);

// Catenoid of neck radius `neck`, vertical axis through the origin, sampled
// over |t| <= t_max; v-period 2 pi.
SurfaceChart catenoid_chart(double neck, double t_max, int nu, int nv);

// Flat equatorial disk sampled as an annular chart (rho from rho0 to 1).
SurfaceChart flat_disk_chart(double rho0, int nu, int nv);

// Triangle-soup self-intersection probe (spatial hash, shared-vertex pairs
// excluded); returns the number of intersecting pairs found (capped).
long self_intersection_probe(const SurfaceChart& chart, long cap = 2000000);

}  // namespace annuli
