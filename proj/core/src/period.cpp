#include "annuli/period.hpp"

#include <cmath>

#include "annuli/error.hpp"
#include "annuli/quadrature.hpp"
#include "annuli/rootfind.hpp"

namespace annuli {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Q(s; r1, r2) written against both s and 1-s so the tanh-sinh nodes keep
// full precision at the endpoints:
//   Q = -sqrt(r1 r2) / (pi sqrt(s(1-s)) t sqrt(1 - r1 r2 t)),  t = r1 + (r2-r1)s.
double q_integrand(double s, double oms, double r1, double r2) {
  double t = r1 * oms + r2 * s;  // = r1 + (r2 - r1) s, exact at both ends
  double root = std::sqrt(s * oms);
  return -std::sqrt(r1 * r2) / (kPi * root * t * std::sqrt(1 - r1 * r2 * t));
}
}  // namespace

double per(double r1, double r2, const Tolerances& tol) {
  if (r1 > r2) std::swap(r1, r2);
  if (!(r2 < 0)) fail(ErrorKind::DomainError, "per requires r1 <= r2 < 0");
  if (r1 == r2) {
    double r = r1;
    return 1.0 / std::sqrt(1 - r * r * r);
  }
  return tanh_sinh_01([&](double s, double oms) { return q_integrand(s, oms, r1, r2); },
                      std::fmax(tol.precision * 0.1, 1e-14));
}

LevelPoint level_point_on_line(double c, double d, double sg_hint, const Tolerances& tol) {
  if (!(d < 0)) fail(ErrorKind::DomainError, "level lines need d = r1 - r2 < 0");
  auto f = [&](double sg) { return per((sg + d) / 2, (sg - d) / 2, tol) - c; };
  // Per is strictly increasing in sg = r1 + r2, so bracket around the hint and
  // widen geometrically if needed. r2 < 0 requires sg < d.
  double start = std::fmin(sg_hint, d - 0.01);
  double step = std::fmax(0.1, 1e-2 * std::fabs(start));
  double lo = start - step, hi = std::fmin(start + step, d - 1e-9);
  double flo = f(lo), fhi = f(hi);
  int grow = 0;
  while ((flo > 0) == (fhi > 0)) {
    if (++grow > 60) fail(ErrorKind::StepFailure, "level-point bracket lost");
    step *= 2;
    if (flo > 0) {
      lo -= step;
      flo = f(lo);
    } else {
      hi = std::fmin(hi + step, d - 1e-9);
      fhi = f(hi);
      if (hi >= d - 1e-9 && fhi < 0)
        fail(ErrorKind::StepFailure, "level point escapes W through r2 -> 0");
    }
  }
  double sg = bisect(f, lo, hi, tol.root_tol * std::fmax(1.0, std::fabs(sg_hint)));
  LevelPoint p;
  p.r1 = (sg + d) / 2;
  p.r2 = (sg - d) / 2;
  p.per_residual = per(p.r1, p.r2, tol) - c;
  return p;
}

LevelCurve trace_level(double c, double d_min, const Tolerances& tol,
                       const SearchConfig& search) {
  if (!(c > 0 && c < 1)) fail(ErrorKind::DomainError, "level value must lie in (0,1)");
  if (!(d_min < 0)) fail(ErrorKind::DomainError, "d_min must be negative");
  LevelCurve curve;
  curve.c = c;
  curve.r_c = std::cbrt(1 - 1 / (c * c));
  curve.points.push_back({curve.r_c, curve.r_c, 0.0});

  double d = 0;
  double step = search.cont_step;
  double sg_prev = 2 * curve.r_c, sg_prev2 = 2 * curve.r_c;
  double d_prev = 0, d_prev2 = 0;
  int successes = 0;
  while (d > d_min + 1e-15) {
    double d_next = std::fmax(d - step, d_min);
    // secant predictor in sg(d); near the diagonal the curve leaves
    // orthogonally, so sg is stationary at first order
    double sg_hint = sg_prev;
    if (d_prev2 < d_prev)
      sg_hint = sg_prev + (sg_prev - sg_prev2) * (d_next - d_prev) / (d_prev - d_prev2);
    try {
      LevelPoint p = level_point_on_line(c, d_next, sg_hint, tol);
      curve.points.push_back(p);
      sg_prev2 = sg_prev;
      d_prev2 = d_prev;
      sg_prev = p.r1 + p.r2;
      d_prev = d_next;
      d = d_next;
      if (++successes >= 3) {
        step = std::fmin(step * 2, search.cont_step_max);
        successes = 0;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::StepFailure) throw;
      step *= 0.5;
      successes = 0;
      if (step < 1e-10) {
        curve.hit_w_boundary = true;
        break;
      }
    }
  }
  return curve;
}

}  // namespace annuli
