#pragma once

#include <cstddef>

namespace annuli {

// One global precision policy; every module inherits from it.
struct Tolerances {
  double precision = 1e-12;       // relative target for kernel quantities
  double pole_guard = 1e-6;       // guard radius around lattice poles
  double ode_drift = 1e-9;        // allowed relative drift of h, k per trajectory
  double root_tol = 1e-12;        // bracketed root refinement
  double domain_boundary = 1e-12; // absolute slack on domain inequalities
};

struct GridConfig {
  int nu = 129;              // samples across [-u_max, u_max]
  int nv_per_period = 128;   // v samples per lattice period (chart has n*nv_per_period+1)
  int min_nu = 33;
  int min_nv = 129;
};

struct SearchConfig {
  double d_min = -8.0;       // continuation range in d = r1 - r2 for sign scans
  int level_scan = 64;       // samples along a level curve for sign location
  double cont_step = 1e-2;   // initial continuation step in d
  double cont_step_max = 0.1;
};

struct JobConfig {
  Tolerances tol;
  GridConfig grid;
  SearchConfig search;
  int threads = 0;           // 0 = hardware concurrency (capped)
};

}  // namespace annuli
