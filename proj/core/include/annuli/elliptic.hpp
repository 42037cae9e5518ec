#pragma once

#include <complex>
#include <vector>

#include "annuli/config.hpp"

namespace annuli {

using cplx = std::complex<double>;

struct LatticeInvariants {
  double g2 = 0;
  double g3 = 0;
  double delta_mod() const { return g2 * g2 * g2 - 27 * g3 * g3; }
};

struct WeierstrassValues {
  cplx p;        // P(z)
  cplx p_prime;  // P'(z)
  cplx zeta;     // zeta(z)
  cplx sigma;    // sigma(z)
};

// Theta-series evaluator for one rectangular lattice orientation with
// nome q = exp(-pi * w2im / om1). Kept private to RectLattice; the public
// entry points reduce arguments into the fundamental cell first and, for
// elongated cells, evaluate on the quarter-turn lattice where q <= e^{-pi}.
struct ThetaEngine {
  double om1 = 0;     // real half-period of this orientation
  double w2im = 0;    // Im of imaginary half-period
  double q = 0;
  double eta1 = 0;    // zeta(om1) for this orientation
  double th1p0 = 0;   // theta_1'(0)
  int terms = 0;
  std::vector<double> coef;  // (-1)^n q^{(n+1/2)^2}

  struct Th1 { cplx t0, t1, t2, t3; };  // theta_1 and first three derivatives

  void init(double om1_, double w2im_);
  Th1 th1_all(cplx v) const;
  // unreduced evaluation; valid for z in the centered fundamental cell
  cplx p_cell(cplx z) const;
  cplx p_prime_cell(cplx z) const;
  cplx zeta_cell(cplx z) const;
  cplx sigma_cell(cplx z) const;
};

// Rectangular lattice with generators {2*om1, 2*i*om2im}. Only the
// positive-discriminant branch is supported.
struct RectLattice {
  LatticeInvariants inv;
  double om1 = 0;      // real half-period, > 0
  double om2_im = 0;   // omega_2 = i*om2_im, om2_im > 0
  double e1 = 0, e2 = 0, e3 = 0;  // branch values, e3 < e2 < e1
  double eta1 = 0;     // zeta(om1)
  double eta2_im = 0;  // zeta(om2) = i*eta2_im
  double pole_guard = 1e-6;

  cplx omega2() const { return {0.0, om2_im}; }
  cplx eta2() const { return {0.0, eta2_im}; }

  // Distance from z to the nearest lattice point of {2a om1 + 2b om2}.
  double lattice_distance(cplx z) const;

  WeierstrassValues eval(cplx z) const;       // all four functions
  cplx p(cplx z) const;
  cplx p_prime(cplx z) const;
  cplx zeta(cplx z) const;
  cplx sigma(cplx z) const;                   // no pole guard (entire)

 private:
  friend RectLattice compute_lattice(const LatticeInvariants&, const Tolerances&);
  bool swapped_ = false;   // evaluate on the quarter-turn lattice
  ThetaEngine eng_;
  void guard(cplx z) const;
};

// Builds the lattice data for real invariants with delta_mod > 0: branch
// values by cubic root isolation, half-periods by the complete elliptic
// integrals of the branch values, eta1 by theta series, eta2 by the
// Legendre relation.
RectLattice compute_lattice(const LatticeInvariants& inv, const Tolerances& tol = {});

}  // namespace annuli
