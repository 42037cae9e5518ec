#pragma once

#include <array>

#include "annuli/config.hpp"
#include "annuli/elliptic.hpp"

namespace annuli {

// Everything derived from the two real parameters (r1, r2):
// r3 = 1/(r1 r2), b = (r1+r2+r3)/3, branch values e_j = (b - r_j)/4,
// invariants (g2, g3), cubic q(x) = -(x-r1)(x-r2)(x-r3) = -x^3 + delta x^2 + h x + k.
struct SpectralParams {
  double r1 = 0, r2 = 0, r3 = 0;
  double b = 0;
  double delta = 0;  // r1 + r2 + r3
  double h = 0;      // -(r1 r2 + r1 r3 + r2 r3)
  double k = 0;      // r1 r2 r3 (normalized to 1)
  std::array<double, 3> e{};  // e1 > e2 > e3
  RectLattice lattice;

  double q_of(double x) const { return -(x - r1) * (x - r2) * (x - r3); }
  double dq_of(double x) const {
    return -((x - r2) * (x - r3) + (x - r1) * (x - r3) + (x - r1) * (x - r2));
  }
  double b_cubic_residual() const {
    return b * b * b - 4 * lattice.inv.g2 * b - 16 * lattice.inv.g3 - 1.0;
  }
};

enum class DomainTag { OutsideW, W_only, Omega_not_Omega0, Omega0, Diagonal, L0 };

struct DomainClass {
  DomainTag tag = DomainTag::OutsideW;
  bool on_boundary = false;  // within tolerance of a defining inequality
};

const char* to_string(DomainTag t);

// r1 < r2 < 0 required.
SpectralParams derive_spectral(double r1, double r2, const Tolerances& tol = {});

DomainClass classify_domain(double r1, double r2, const Tolerances& tol = {});

// The quartic p(u,X) attached to a solution state (alpha, beta, alpha', beta'):
// p(u,X) = -alpha^2 X^4 - 4 alpha' X^3 + (6 alpha beta - 4 delta) X^2
//          + 4 beta' X - (4 + beta^2).
struct PPoly {
  std::array<double, 5> c{};  // c[i] multiplies X^i
  double operator()(double X) const {
    return ((((c[4] * X + c[3]) * X + c[2]) * X + c[1]) * X + c[0]);
  }
};

struct QPEval {
  double q_of_x = 0;
  PPoly p;
};

struct AbData {
  double alpha = 0, beta = 0, alpha_prime = 0, beta_prime = 0;
};

QPEval eval_q_p(const SpectralParams& sp, double x, const AbData& u_data);

// Textbook coefficient discriminants (cubic in x, quartic in X). For the
// pair (q, p) above they satisfy disc(p) = 4096 disc(q) at every u.
double discriminant_q(const SpectralParams& sp);
double discriminant_p(const PPoly& p);

}  // namespace annuli
