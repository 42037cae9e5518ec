#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace annuli {

// tanh-sinh rule on (0,1) for integrands with integrable endpoint
// singularities. The integrand receives BOTH s and 1-s so it can keep full
// relative precision near either endpoint.
//
// Integrates f(s, 1-s) ds over (0,1); `eps` is the requested relative
// accuracy of the level-to-level stabilization.
template <typename F>
double tanh_sinh_01(F&& f, double eps = 1e-13, int max_level = 10) {
  const double tmax = 6.6;  // weights underflow beyond this for double
  auto node = [](double t, double& s, double& oms, double& w) {
    double u = (3.14159265358979323846 / 2) * std::sinh(t);
    // s = 1/(1+e^{-2u}), 1-s = 1/(1+e^{2u})
    s = 1.0 / (1.0 + std::exp(-2 * u));
    oms = 1.0 / (1.0 + std::exp(2 * u));
    double ch = std::cosh(u);
    w = (3.14159265358979323846 / 2) * std::cosh(t) / (2 * ch * ch);
  };
  double h = 1.0;
  double s0, o0, w0;
  node(0.0, s0, o0, w0);
  double sum = w0 * f(s0, o0);
  for (double t = 1.0; t <= tmax; t += 1.0) {
    double s, oms, w;
    node(t, s, oms, w);
    if (w > 1e-290) sum += w * (f(s, oms) + f(oms, s));
  }
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double add = 0;
    // new nodes at odd multiples of h
    for (double t = h; t <= tmax; t += 2 * h) {
      double s, oms, w;
      node(t, s, oms, w);
      if (w > 1e-290) add += w * (f(s, oms) + f(oms, s));
    }
    double prev = sum * (2 * h);  // previous level's estimate
    sum += add;
    double cur = sum * h;
    if (level >= 3 && std::fabs(cur - prev) <= eps * (std::fabs(cur) + 1e-300)) return cur;
  }
  return sum * h;
}

namespace gl {
// 16-point Gauss-Legendre nodes/weights on [-1,1].
inline constexpr double x16[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
inline constexpr double w16[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};
}  // namespace gl

// 16-point Gauss-Legendre over a straight complex segment [a,b].
template <typename F, typename R>
R gl16_segment(F&& f, std::complex<double> a, std::complex<double> b, R zero) {
  std::complex<double> mid = 0.5 * (a + b), half = 0.5 * (b - a);
  R acc = zero;
  for (int i = 0; i < 8; ++i) {
    acc += gl::w16[i] * (f(mid + half * gl::x16[i]) + f(mid - half * gl::x16[i]));
  }
  return acc * half;
}

// Adaptive composite Gauss-Legendre along segment [a,b]: bisects panels until
// the GL16 value of a panel is stable against its two halves. R needs +, -,
// scaling by complex<double>/double, and a free abs().
template <typename F, typename R>
R gl_adaptive_segment(F&& f, std::complex<double> a, std::complex<double> b, R zero,
                      double rel_tol = 1e-13, int max_depth = 24, double scale_hint = 0.0) {
  using std::abs;
  struct Frame { std::complex<double> a, b; R whole; int depth; };
  R total = zero;
  double scale = scale_hint;
  std::vector<Frame> stack;
  stack.push_back({a, b, gl16_segment(f, a, b, zero), 0});
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    std::complex<double> m = 0.5 * (fr.a + fr.b);
    R left = gl16_segment(f, fr.a, m, zero);
    R right = gl16_segment(f, m, fr.b, zero);
    R sum = left + right;
    double err = abs(sum - fr.whole);
    double ref = abs(sum) + scale;
    if (fr.depth >= max_depth || err <= rel_tol * (ref + 1e-300)) {
      total += sum;
    } else {
      stack.push_back({fr.a, m, left, fr.depth + 1});
      stack.push_back({m, fr.b, right, fr.depth + 1});
    }
  }
  return total;
}

// Complete elliptic integral I(a,b) = \int_0^{pi/2} dtheta / sqrt(a^2 cos^2 + b^2 sin^2),
// the form that the half-period integrals reduce to after the endpoint
// substitution x = e +- xi^2. Evaluated by composite GL16; the integrand is
// analytic on the closed interval for a,b > 0.
double complete_elliptic_axis(double a, double b, double rel_tol = 1e-14);

}  // namespace annuli
