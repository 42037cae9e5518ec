#pragma once

#include <cmath>
#include <functional>

#include "annuli/error.hpp"

namespace annuli {

// Brent's method on a sign-changing bracket [a, b].
template <typename F>
double brent(F&& f, double a, double b, double xtol = 1e-14, int maxit = 200) {
  double fa = f(a), fb = f(b);
  if (fa == 0) return a;
  if (fb == 0) return b;
  if ((fa > 0) == (fb > 0)) fail(ErrorKind::NoBracket, "brent: endpoints have equal signs");
  double c = a, fc = fa, d = b - a, e = d;
  for (int it = 0; it < maxit; ++it) {
    if ((fb > 0) == (fc > 0)) { c = a; fc = fa; d = e = b - a; }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    double tol1 = 2 * 2.2204460492503131e-16 * std::fabs(b) + 0.5 * xtol;
    double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0) return b;
    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      double s = fb / fa, p, q;
      if (a == c) {
        p = 2 * xm * s;
        q = 1 - s;
      } else {
        double r = fb / fc;
        double t = fa / fc;
        p = s * (2 * xm * t * (t - r) - (b - a) * (r - 1));
        q = (t - 1) * (r - 1) * (s - 1);
      }
      if (p > 0) q = -q;
      p = std::fabs(p);
      if (2 * p < std::fmin(3 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
        e = d; d = p / q;
      } else {
        d = xm; e = d;
      }
    } else {
      d = xm; e = d;
    }
    a = b; fa = fb;
    b += (std::fabs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
    fb = f(b);
  }
  fail(ErrorKind::RootFailure, "brent: no convergence");
}

// Plain bisection for monotone f; needs f(a), f(b) of opposite signs.
template <typename F>
double bisect(F&& f, double a, double b, double xtol = 1e-14, int maxit = 200) {
  double fa = f(a), fb = f(b);
  if (fa == 0) return a;
  if (fb == 0) return b;
  if ((fa > 0) == (fb > 0)) fail(ErrorKind::NoBracket, "bisect: endpoints have equal signs");
  for (int it = 0; it < maxit && std::fabs(b - a) > xtol; ++it) {
    double m = 0.5 * (a + b), fm = f(m);
    if (fm == 0) return m;
    if ((fm > 0) == (fa > 0)) { a = m; fa = fm; }
    else { b = m; fb = fm; }
  }
  return 0.5 * (a + b);
}

}  // namespace annuli
