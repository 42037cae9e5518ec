#pragma once

#include <vector>

#include "annuli/config.hpp"

namespace annuli {

// Per(r1, r2) in (0,1): the closure indicator of the spherical curvature
// lines. On the diagonal the closed form 1/sqrt(1 - r^3) applies; off the
// diagonal the singular integral \int_0^1 Q(s) ds is evaluated by tanh-sinh.
double per(double r1, double r2, const Tolerances& tol = {});

struct LevelPoint {
  double r1 = 0, r2 = 0;
  double per_residual = 0;
};

struct LevelCurve {
  double c = 0;
  double r_c = 0;                 // diagonal start, cbrt(1 - 1/c^2)
  std::vector<LevelPoint> points; // ordered by d = r1 - r2 decreasing from 0
  bool hit_w_boundary = false;    // stopped before d_min
};

// Solves Per((sg+d)/2, (sg-d)/2) = c for sg = r1 + r2 on the line
// r1 - r2 = d, by monotone bisection. `sg_hint` seeds the bracket.
LevelPoint level_point_on_line(double c, double d, double sg_hint,
                               const Tolerances& tol = {});

// Traces Per^{-1}(c) from its diagonal start (r_c, r_c) down to d = d_min by
// adaptive continuation in d with a bisection corrector in r1 + r2.
LevelCurve trace_level(double c, double d_min, const Tolerances& tol = {},
                       const SearchConfig& search = {});

}  // namespace annuli
