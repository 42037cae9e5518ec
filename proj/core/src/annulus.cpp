#include "annuli/annulus.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "annuli/error.hpp"
#include "annuli/hamiltonian.hpp"
#include "annuli/rootfind.hpp"

namespace annuli {

namespace {

// u with c3(u) = 0; c3 decreases from +inf to -inf on (0, om1).
double solve_u_star(const WeierstrassData& data, const Tolerances& tol) {
  double om1 = data.sp.lattice.om1;
  double lo = 1e-4 * om1, hi = om1 - 20 * tol.pole_guard;
  double flo = c3_of(data, lo, tol);
  while (flo < 0) {
    lo *= 0.25;
    if (lo < 1e-12 * om1) fail(ErrorKind::RootFailure, "c3 not positive near u = 0");
    flo = c3_of(data, lo, tol);
  }
  double fhi = c3_of(data, hi, tol);
  int shrink = 0;
  while (fhi > 0) {
    hi = om1 - (om1 - hi) * 0.5;
    if (++shrink > 40) fail(ErrorKind::RootFailure, "c3 not negative near u = om1");
    fhi = c3_of(data, hi, tol);
  }
  return brent([&](double u) { return c3_of(data, u, tol); }, lo, hi, tol.root_tol * om1);
}

struct PipelinePoint {
  SpectralParams sp;
  WeierstrassData data;
};

PipelinePoint make_point(double r1, double r2, const Tolerances& tol) {
  PipelinePoint p;
  p.sp = derive_spectral(r1, r2, tol);
  p.data = build_data(p.sp, 1.0, tol);
  return p;
}

// Walks the level curve from the diagonal end to the line r1 - r2 = d,
// keeping every corrector bracket local. Updates sg_hint to r1 + r2 there.
LevelPoint walk_to(double c, double d, double& sg_hint, const Tolerances& tol) {
  double r_c = std::cbrt(1 - 1 / (c * c));
  if (sg_hint == 0) sg_hint = 2 * r_c;
  double cur = -1e-3;
  if (d >= cur) {
    LevelPoint p = level_point_on_line(c, d, sg_hint, tol);
    sg_hint = p.r1 + p.r2;
    return p;
  }
  LevelPoint p{r_c, r_c, 0};
  while (cur > d) {
    // geometric step growth, capped, clamped at the target
    cur = std::fmax(d, std::fmax(cur * 1.8, cur - 0.4));
    p = level_point_on_line(c, cur, sg_hint, tol);
    sg_hint = p.r1 + p.r2;
  }
  return p;
}

double beta_of_point(const PipelinePoint& pt, double u, const Tolerances& tol) {
  double a, b;
  extract_ab(pt.data, u, a, b, tol);
  return b;
}

// Locates the height zero along Per^{-1}(c) by the sign of beta at the
// c3 = 0 parameter. Returns the on-curve point; fills the scan profile.
LevelPoint find_height_zero(double c, const JobConfig& cfg, SignScanProfile* profile) {
  const Tolerances& tol = cfg.tol;
  double sg_walk = 0;
  int N = std::max(8, cfg.search.level_scan);
  double d_hi = -1e-3;
  double d_lo = cfg.search.d_min;
  double prev_d = 0, prev_b = 0, found_lo = 0, found_hi = 0;
  double sg_local = 0;
  for (int i = 0; i < N; ++i) {
    double d = d_hi + (d_lo - d_hi) * i / (N - 1.0);
    LevelPoint p = walk_to(c, d, sg_walk, tol);
    PipelinePoint pt = make_point(p.r1, p.r2, tol);
    double b = beta_of_point(pt, solve_u_star(pt.data, tol), tol);
    if (profile) {
      profile->d.push_back(d);
      profile->beta_ustar.push_back(b);
    }
    if (i > 0 && (b > 0) != (prev_b > 0)) {
      found_lo = prev_d;
      found_hi = d;
      sg_local = sg_walk;
      break;
    }
    prev_d = d;
    prev_b = b;
  }
  if (found_hi == 0) {
    std::ostringstream os;
    os << "no sign change of beta(u*) along Per^-1(" << c << ") for d in [" << d_lo
       << ", 0)";
    if (profile) {
      os << "; sampled profile:";
      for (std::size_t i = 0; i < profile->d.size(); ++i)
        os << " (" << profile->d[i] << ", " << profile->beta_ustar[i] << ")";
    }
    fail(ErrorKind::NoSignChange, os.str());
  }
  // bisect in d with locally-seeded correctors
  double sg_iter = sg_local;
  double d_star = brent(
      [&](double d) {
        LevelPoint p = level_point_on_line(c, d, sg_iter, tol);
        sg_iter = p.r1 + p.r2;
        PipelinePoint pt = make_point(p.r1, p.r2, tol);
        return beta_of_point(pt, solve_u_star(pt.data, tol), tol);
      },
      found_lo, found_hi, tol.root_tol * 10);
  LevelPoint p = level_point_on_line(c, d_star, sg_iter, tol);
  return p;
}

// Normalizes the solved chart into the unit ball and fills the shared fields.
void finish_solution(AnnulusSolution& sol, const PipelinePoint& pt, double u_b, int periods,
                     const JobConfig& cfg) {
  const Tolerances& tol = cfg.tol;
  SphereRecord rec = extract_record(pt.data, u_b, tol);
  sol.tau_or_ustar = u_b;
  sol.sphere_radius = rec.radius;
  sol.boundary_angle = rec.theta;
  sol.translate = -rec.center;
  sol.scale = 1.0 / rec.radius;
  int nv_pp = std::max(16, cfg.grid.nv_per_period);
  SurfaceChart ch = build_chart(pt.data, u_b, periods, cfg.grid.nu, nv_pp, tol, cfg.threads);
  ch.closed_v = sol.compact;
  ch.m = sol.m;
  ch.n = sol.n;
  transform_chart(ch, sol.translate, sol.scale);
  sol.chart = std::move(ch);
}

}  // namespace

HeightSample height(double r1, double r2, const Tolerances& tol) {
  SpectralParams sp = derive_spectral(r1, r2, tol);
  TauResult tr = find_tau(sp, tol);  // raises NotOmega0 outside Omega_0
  WeierstrassData data = build_data(sp, 1.0, tol);
  // re-solve tau on the surface side (closed forms); the two routes must agree
  auto beta_surface = [&](double u) {
    double a, b;
    extract_ab(data, u, a, b, tol);
    return b;
  };
  double tau = tr.tau;
  bool bracketed = false;
  for (double w : {1e-6, 1e-4, 1e-2}) {
    double lo = tr.tau * (1 - w), hi = std::fmin(tr.tau * (1 + w), 0.999 * sp.lattice.om1);
    if ((beta_surface(lo) > 0) != (beta_surface(hi) > 0)) {
      tau = brent(beta_surface, lo, hi, tol.root_tol);
      bracketed = true;
      break;
    }
  }
  if (!bracketed || std::fabs(tau - tr.tau) > 1e-7 * std::fmax(1.0, tr.tau))
    fail(ErrorKind::RootFailure, "flow-side and surface-side tau disagree");
  HeightSample out;
  out.r1 = r1;
  out.r2 = r2;
  out.tau = tau;
  out.h_value = -c3_at_beta_zero(data, tau);
  return out;
}

double beta_at_ustar(double c, double d, double& sg_hint, const JobConfig& cfg) {
  LevelPoint p = walk_to(c, d, sg_hint, cfg.tol);
  PipelinePoint pt = make_point(p.r1, p.r2, cfg.tol);
  return beta_of_point(pt, solve_u_star(pt.data, cfg.tol), cfg.tol);
}

AnnulusSolution solve_free_boundary(int m, int n, const JobConfig& cfg) {
  if (m <= 0 || n <= 0 || m >= n || std::gcd(m, n) != 1)
    fail(ErrorKind::DomainError, "period must be an irreducible fraction in (0,1)");
  const double c = static_cast<double>(m) / n;
  const Tolerances& tol = cfg.tol;

  SignScanProfile profile;
  LevelPoint p = find_height_zero(c, cfg, &profile);
  PipelinePoint pt = make_point(p.r1, p.r2, tol);
  double us = solve_u_star(pt.data, tol);

  AnnulusSolution sol;
  sol.kind = AnnulusKind::FreeBoundary;
  sol.r1 = p.r1;
  sol.r2 = p.r2;
  sol.m = m;
  sol.n = n;
  sol.period_value = per(p.r1, p.r2, tol);
  sol.compact = true;
  finish_solution(sol, pt, us, n, cfg);

  Expectations ex;
  ex.kind = Expectations::Kind::FreeBoundary;
  ex.m = m;
  ex.n = n;
  sol.report = verify_chart(sol.chart, ex, {}, cfg.grid);
  sol.report.per_value = sol.period_value;
  return sol;
}

AnnulusSolution build_capillary(int n, double d, const JobConfig& cfg) {
  if (n < 2) fail(ErrorKind::DomainError, "capillary family needs n >= 2");
  if (d > 0) fail(ErrorKind::DomainError, "d = r1 - r2 must be <= 0");
  const Tolerances& tol = cfg.tol;
  const double c = 1.0 / n;

  AnnulusSolution sol;
  sol.kind = AnnulusKind::Capillary;
  sol.m = 1;
  sol.n = n;
  sol.compact = true;

  if (d == 0) {
    // rotational member: the catenoid of necksize rbar^2, clipped where the
    // limiting center-height formula vanishes
    double rbar = std::cbrt(1.0 - static_cast<double>(n) * n);
    SpectralParams sp;
    sp.r1 = sp.r2 = rbar;
    sp.r3 = 1 / (rbar * rbar);
    sp.delta = 2 * rbar + sp.r3;
    sp.h = -(rbar * rbar + 2 * rbar * sp.r3);
    sp.k = 1;
    AbTrajectory tr = integrate_ab(sp, {0, 0, 0, 1, sp.h}, 12.0, tol);
    auto cbar = [&](double u) {
      AbState y = tr.eval(u);
      return rbar * u + (2 - y.beta * std::sinh(u / rbar)) / (y.alpha * std::cosh(u / rbar));
    };
    double lo = 0.05;
    while (cbar(lo) < 0) lo *= 0.5;
    double us = brent(cbar, lo, 11.0, tol.root_tol);
    AbState y = tr.eval(us);
    sol.r1 = sol.r2 = rbar;
    sol.period_value = c;
    sol.tau_or_ustar = us;
    sol.boundary_angle = std::atan2(2.0, y.beta);
    // boundary circle against the center (0,0,0) of the limiting sphere
    double neck = rbar * rbar;
    double t_b = us / std::fabs(rbar);
    sol.sphere_radius = std::hypot(neck * std::cosh(t_b), neck * t_b);
    int nv = n * std::max(16, cfg.grid.nv_per_period) + 1;
    SurfaceChart ch = catenoid_chart(neck, t_b, cfg.grid.nu, nv);
    sol.translate = {0, 0, 0};
    sol.scale = 1.0 / sol.sphere_radius;
    transform_chart(ch, sol.translate, sol.scale);
    ch.m = 1;
    ch.n = n;
    ch.periods = n;
    sol.chart = std::move(ch);
  } else {
    double sg_hint = 0;
    LevelPoint p = walk_to(c, d, sg_hint, tol);
    PipelinePoint pt = make_point(p.r1, p.r2, tol);
    double us = solve_u_star(pt.data, tol);
    sol.r1 = p.r1;
    sol.r2 = p.r2;
    sol.period_value = per(p.r1, p.r2, tol);
    finish_solution(sol, pt, us, n, cfg);
  }

  Expectations ex;
  ex.kind = Expectations::Kind::Capillary;
  ex.m = 1;
  ex.n = n;
  ex.angle = sol.boundary_angle;
  sol.report = verify_chart(sol.chart, ex, {}, cfg.grid);
  sol.report.per_value = sol.period_value;
  return sol;
}

AnnulusSolution build_strip(double c, int periods, const JobConfig& cfg) {
  if (!(c > 0 && c < 1)) fail(ErrorKind::DomainError, "level must lie in (0,1)");
  if (periods < 1) fail(ErrorKind::DomainError, "periods must be >= 1");
  const Tolerances& tol = cfg.tol;

  LevelPoint p = find_height_zero(c, cfg, nullptr);
  PipelinePoint pt = make_point(p.r1, p.r2, tol);
  double us = solve_u_star(pt.data, tol);

  AnnulusSolution sol;
  sol.kind = AnnulusKind::Strip;
  sol.r1 = p.r1;
  sol.r2 = p.r2;
  sol.m = 0;
  sol.n = 0;
  sol.period_value = per(p.r1, p.r2, tol);
  sol.compact = false;  // truncated multi-period chart, no closure claim
  finish_solution(sol, pt, us, periods, cfg);

  Expectations ex;
  ex.kind = Expectations::Kind::Strip;
  ex.m = 0;
  ex.n = 0;
  ex.probe_self_intersection = false;
  sol.report = verify_chart(sol.chart, ex, {}, cfg.grid);
  sol.report.per_value = sol.period_value;
  return sol;
}

}  // namespace annuli
