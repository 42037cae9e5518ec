#include "annuli/params.hpp"

#include <algorithm>
#include <cmath>

#include "annuli/error.hpp"

namespace annuli {

const char* to_string(DomainTag t) {
  switch (t) {
    case DomainTag::OutsideW: return "OutsideW";
    case DomainTag::W_only: return "W_only";
    case DomainTag::Omega_not_Omega0: return "Omega_not_Omega0";
    case DomainTag::Omega0: return "Omega0";
    case DomainTag::Diagonal: return "Diagonal";
    case DomainTag::L0: return "L0";
  }
  return "?";
}

SpectralParams derive_spectral(double r1, double r2, const Tolerances& tol) {
  if (!(r1 < r2 && r2 < 0))
    fail(ErrorKind::DomainError, "derive_spectral requires r1 < r2 < 0");
  SpectralParams sp;
  sp.r1 = r1;
  sp.r2 = r2;
  sp.r3 = 1.0 / (r1 * r2);
  sp.b = (r1 + r2 + sp.r3) / 3.0;
  sp.delta = r1 + r2 + sp.r3;
  sp.h = -(r1 * r2 + r1 * sp.r3 + r2 * sp.r3);
  sp.k = r1 * r2 * sp.r3;
  double ee[3] = {(sp.b - r1) / 4, (sp.b - r2) / 4, (sp.b - sp.r3) / 4};
  std::sort(ee, ee + 3, std::greater<double>());
  sp.e = {ee[0], ee[1], ee[2]};
  LatticeInvariants inv;
  inv.g2 = -4 * (ee[0] * ee[1] + ee[1] * ee[2] + ee[2] * ee[0]);
  inv.g3 = 4 * ee[0] * ee[1] * ee[2];
  sp.lattice = compute_lattice(inv, tol);
  return sp;
}

DomainClass classify_domain(double r1, double r2, const Tolerances& tol) {
  const double bt = tol.domain_boundary;
  const double cbrt2 = std::cbrt(2.0);
  DomainClass out;

  double diag = r1 - r2;
  if (std::fabs(diag) <= bt && r1 < 0) {
    double r = 0.5 * (r1 + r2);
    if (r > -cbrt2 - bt && r <= -1 + bt) {
      out.tag = DomainTag::L0;
      out.on_boundary = std::fabs(r + cbrt2) <= bt || std::fabs(r + 1) <= bt;
    } else {
      out.tag = DomainTag::Diagonal;
      out.on_boundary = std::fabs(r + cbrt2) <= bt || std::fabs(r + 1) <= bt;
    }
    return out;
  }

  if (!(r1 < r2 && r2 < 0)) {
    out.tag = DomainTag::OutsideW;
    return out;
  }

  // Omega: -cbrt(2) < r2 < 0 and (-1 - sqrt(1 - 4 r2^3)) / (2 r2^2) < r1 < r2
  double lo = (-1 - std::sqrt(1 - 4 * r2 * r2 * r2)) / (2 * r2 * r2);
  bool in_omega = (r2 > -cbrt2) && (r1 > lo);
  bool boundary = std::fabs(r2 + cbrt2) <= bt || std::fabs(r1 - lo) <= bt;

  if (!in_omega) {
    out.tag = DomainTag::W_only;
    out.on_boundary = boundary;
    return out;
  }
  double s = r1 * r2 * r2;  // Omega0 iff r1 r2^2 < -1
  out.on_boundary = boundary || std::fabs(s + 1) <= bt;
  out.tag = (s < -1) ? DomainTag::Omega0 : DomainTag::Omega_not_Omega0;
  return out;
}

QPEval eval_q_p(const SpectralParams& sp, double x, const AbData& d) {
  QPEval out;
  out.q_of_x = sp.q_of(x);
  out.p.c[4] = -d.alpha * d.alpha;
  out.p.c[3] = -4 * d.alpha_prime;
  out.p.c[2] = 6 * d.alpha * d.beta - 4 * sp.delta;
  out.p.c[1] = 4 * d.beta_prime;
  out.p.c[0] = -(4 + d.beta * d.beta);
  return out;
}

double discriminant_q(const SpectralParams& sp) {
  // q(x) = -x^3 + delta x^2 + h x + k
  double a = -1, b = sp.delta, c = sp.h, d = sp.k;
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
         27 * a * a * d * d;
}

double discriminant_p(const PPoly& p) {
  double c0 = p.c[0], c1 = p.c[1], c2 = p.c[2], c3 = p.c[3], c4 = p.c[4];
  // standard quartic discriminant; degenerates to c3^2 * disc3 when c4 = 0
  return 256 * c4 * c4 * c4 * c0 * c0 * c0 - 192 * c4 * c4 * c3 * c1 * c0 * c0 -
         128 * c4 * c4 * c2 * c2 * c0 * c0 + 144 * c4 * c4 * c2 * c1 * c1 * c0 -
         27 * c4 * c4 * c1 * c1 * c1 * c1 + 144 * c4 * c3 * c3 * c2 * c0 * c0 -
         6 * c4 * c3 * c3 * c1 * c1 * c0 - 80 * c4 * c3 * c2 * c2 * c1 * c0 +
         18 * c4 * c3 * c2 * c1 * c1 * c1 + 16 * c4 * c2 * c2 * c2 * c2 * c0 -
         4 * c4 * c2 * c2 * c2 * c1 * c1 - 27 * c3 * c3 * c3 * c3 * c0 * c0 +
         18 * c3 * c3 * c3 * c2 * c1 * c0 - 4 * c3 * c3 * c3 * c1 * c1 * c1 -
         4 * c3 * c3 * c2 * c2 * c2 * c0 + c3 * c3 * c2 * c2 * c1 * c1;
}

}  // namespace annuli
