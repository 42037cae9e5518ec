#include "annuli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "annuli/error.hpp"
#include "annuli/mesh.hpp"
#include "annuli/rootfind.hpp"

namespace annuli {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

SphereFit fit_sphere(const std::vector<Vec3>& points) {
  if (points.size() < 4) fail(ErrorKind::Degenerate, "sphere fit needs at least 4 points");
  Vec3 centroid{0, 0, 0};
  for (const auto& p : points) centroid += p;
  centroid = centroid / static_cast<double>(points.size());
  // covariance spectrum classifies plane/line degeneracies
  std::array<std::array<double, 3>, 3> cov{};
  double spread2 = 0;
  for (const auto& p : points) {
    Vec3 d = p - centroid;
    spread2 = std::fmax(spread2, d.norm2());
    cov[0][0] += d.x * d.x; cov[0][1] += d.x * d.y; cov[0][2] += d.x * d.z;
    cov[1][0] += d.y * d.x; cov[1][1] += d.y * d.y; cov[1][2] += d.y * d.z;
    cov[2][0] += d.z * d.x; cov[2][1] += d.z * d.y; cov[2][2] += d.z * d.z;
  }
  std::array<double, 3> eval;
  std::array<Vec3, 3> evec;
  eigen_sym3(cov, eval, evec);
  double n = static_cast<double>(points.size());
  if (eval[1] <= 1e-18 * n * spread2) fail(ErrorKind::Degenerate, "points are collinear");

  SphereFit out;
  if (eval[0] <= 1e-18 * n * spread2) {
    // coplanar: return the plane (infinite radius)
    out.is_plane = true;
    out.radius = kInf;
    out.plane_normal = evec[0];
    out.plane_offset = out.plane_normal.dot(centroid);
    double maxd = 0;
    for (const auto& p : points)
      maxd = std::fmax(maxd, std::fabs(out.plane_normal.dot(p) - out.plane_offset));
    out.residual = maxd;
    out.center = centroid;
    return out;
  }

  // algebraic fit: |p|^2 - 2 <c,p> + rho = 0, unknowns (c, rho)
  std::array<std::array<double, 4>, 4> a{};
  std::array<double, 4> b{};
  for (const auto& p : points) {
    double row[4] = {-2 * p.x, -2 * p.y, -2 * p.z, 1.0};
    double rhs = -(p.dot(p));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) a[i][j] += row[i] * row[j];
      b[i] += row[i] * rhs;
    }
  }
  // tiny Tikhonov term keeps rank-deficient inputs (circles) solvable
  double reg = 1e-14 * (a[0][0] + a[1][1] + a[2][2] + a[3][3]);
  for (int i = 0; i < 4; ++i) a[i][i] += reg;
  if (!solve_linear(a, b)) fail(ErrorKind::Degenerate, "singular sphere-fit system");
  out.center = {b[0], b[1], b[2]};
  double r2 = out.center.dot(out.center) - b[3];
  if (!(r2 > 0)) fail(ErrorKind::Degenerate, "sphere fit produced a negative radius");
  out.radius = std::sqrt(r2);
  double maxres = 0;
  for (const auto& p : points)
    maxres = std::fmax(maxres, std::fabs((p - out.center).norm() - out.radius));
  out.residual = maxres / out.radius;
  return out;
}

RadialFit fit_sphere_through_center(const std::vector<Vec3>& points, const Vec3& center) {
  RadialFit f;
  if (points.empty()) return f;
  for (const auto& p : points) f.radius += (p - center).norm();
  f.radius /= static_cast<double>(points.size());
  for (const auto& p : points)
    f.residual = std::fmax(f.residual, std::fabs((p - center).norm() - f.radius));
  f.residual /= f.radius;
  return f;
}

namespace {

// --- Moller-style triangle-triangle intersection ---

bool coplanar_tri_tri(const Vec3& n, const Vec3 v[3], const Vec3 u[3]) {
  int i0, i1;
  Vec3 a{std::fabs(n.x), std::fabs(n.y), std::fabs(n.z)};
  if (a.x > a.y && a.x > a.z) { i0 = 1; i1 = 2; }
  else if (a.y > a.z) { i0 = 0; i1 = 2; }
  else { i0 = 0; i1 = 1; }
  auto comp = [&](const Vec3& p, int i) { return i == 0 ? p.x : (i == 1 ? p.y : p.z); };
  auto edge_edge = [&](const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1) {
    double ax = comp(a1, i0) - comp(a0, i0), ay = comp(a1, i1) - comp(a0, i1);
    double bx = comp(b0, i0) - comp(b1, i0), by = comp(b0, i1) - comp(b1, i1);
    double cx = comp(a0, i0) - comp(b0, i0), cy = comp(a0, i1) - comp(b0, i1);
    double f = ay * bx - ax * by;
    double d = by * cx - bx * cy;
    if ((f > 0 && d >= 0 && d <= f) || (f < 0 && d <= 0 && d >= f)) {
      double e = ax * cy - ay * cx;
      if (f > 0) return e >= 0 && e <= f;
      return e <= 0 && e >= f;
    }
    return false;
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (edge_edge(v[i], v[(i + 1) % 3], u[j], u[(j + 1) % 3])) return true;
  auto point_in = [&](const Vec3& p, const Vec3 t[3]) {
    double d[3];
    for (int i = 0; i < 3; ++i) {
      double ex = comp(t[(i + 1) % 3], i0) - comp(t[i], i0);
      double ey = comp(t[(i + 1) % 3], i1) - comp(t[i], i1);
      double px = comp(p, i0) - comp(t[i], i0);
      double py = comp(p, i1) - comp(t[i], i1);
      d[i] = ex * py - ey * px;
    }
    return d[0] * d[1] > 0 && d[0] * d[2] > 0;
  };
  return point_in(v[0], u) || point_in(u[0], v);
}

void isect_params(double vv0, double vv1, double vv2, double d0, double d1, double d2,
                  double& t0, double& t1) {
  t0 = vv0 + (vv2 - vv0) * d0 / (d0 - d2);
  t1 = vv1 + (vv2 - vv1) * d1 / (d1 - d2);
}

bool tri_tri_intersect(const Vec3 v[3], const Vec3 u[3], double eps) {
  Vec3 n1 = (v[1] - v[0]).cross(v[2] - v[0]);
  double d1 = -n1.dot(v[0]);
  double du[3];
  for (int i = 0; i < 3; ++i) {
    du[i] = n1.dot(u[i]) + d1;
    if (std::fabs(du[i]) < eps) du[i] = 0;
  }
  if ((du[0] > 0 && du[1] > 0 && du[2] > 0) || (du[0] < 0 && du[1] < 0 && du[2] < 0))
    return false;

  Vec3 n2 = (u[1] - u[0]).cross(u[2] - u[0]);
  double d2 = -n2.dot(u[0]);
  double dv[3];
  for (int i = 0; i < 3; ++i) {
    dv[i] = n2.dot(v[i]) + d2;
    if (std::fabs(dv[i]) < eps) dv[i] = 0;
  }
  if ((dv[0] > 0 && dv[1] > 0 && dv[2] > 0) || (dv[0] < 0 && dv[1] < 0 && dv[2] < 0))
    return false;

  Vec3 dir = n1.cross(n2);
  double maxc = std::fabs(dir.x);
  int idx = 0;
  if (std::fabs(dir.y) > maxc) { maxc = std::fabs(dir.y); idx = 1; }
  if (std::fabs(dir.z) > maxc) { maxc = std::fabs(dir.z); idx = 2; }
  if (maxc < eps) {
    if (du[0] == 0 && du[1] == 0 && du[2] == 0) {
      // probe semantics: coplanar contact only counts when the interiors
      // overlap, so pull both triangles slightly toward their centroids
      Vec3 cv = (v[0] + v[1] + v[2]) / 3.0, cu = (u[0] + u[1] + u[2]) / 3.0;
      const double shrink = 1e-7;
      Vec3 vs[3], us[3];
      for (int i = 0; i < 3; ++i) {
        vs[i] = v[i] + (cv - v[i]) * shrink;
        us[i] = u[i] + (cu - u[i]) * shrink;
      }
      return coplanar_tri_tri(n1, vs, us);
    }
    return false;
  }
  auto comp = [&](const Vec3& p) { return idx == 0 ? p.x : (idx == 1 ? p.y : p.z); };

  auto interval = [&](const Vec3 t[3], const double d[3], double& a, double& b) {
    double p0 = comp(t[0]), p1 = comp(t[1]), p2 = comp(t[2]);
    if (d[0] * d[1] > 0) isect_params(p0, p1, p2, d[0], d[1], d[2], a, b);
    else if (d[0] * d[2] > 0) isect_params(p0, p2, p1, d[0], d[2], d[1], a, b);
    else if (d[1] * d[2] > 0 || d[0] != 0) isect_params(p1, p2, p0, d[1], d[2], d[0], a, b);
    else if (d[1] != 0) isect_params(p0, p2, p1, d[0], d[2], d[1], a, b);
    else if (d[2] != 0) isect_params(p0, p1, p2, d[0], d[1], d[2], a, b);
    else { a = 1; b = 0; }
    if (a > b) std::swap(a, b);
  };
  double a0, a1, b0, b1;
  interval(v, dv, a0, a1);
  interval(u, du, b0, b1);
  return std::fmax(a0, b0) <= std::fmin(a1, b1) - eps;
}

struct CellHash {
  std::size_t operator()(long long k) const { return std::hash<long long>()(k); }
};

}  // namespace

long self_intersection_probe(const SurfaceChart& chart, long cap) {
  Mesh mesh = mesh_from_chart(chart, true);
  const auto& V = mesh.vertices;
  const auto& T = mesh.triangles;
  int nt = static_cast<int>(T.size());
  Vec3 lo{kInf, kInf, kInf}, hi{-kInf, -kInf, -kInf};
  for (const auto& p : V) {
    lo = {std::fmin(lo.x, p.x), std::fmin(lo.y, p.y), std::fmin(lo.z, p.z)};
    hi = {std::fmax(hi.x, p.x), std::fmax(hi.y, p.y), std::fmax(hi.z, p.z)};
  }
  double mean_edge = 0;
  int samples = 0;
  for (int i = 0; i < nt; i += std::max(1, nt / 500)) {
    mean_edge += (V[T[i][0]] - V[T[i][1]]).norm();
    ++samples;
  }
  mean_edge /= std::max(1, samples);
  double cell = std::fmax(1e-9, 1.8 * mean_edge);
  auto cell_of = [&](double x, double l) {
    return static_cast<long long>(std::floor((x - l) / cell));
  };
  std::unordered_map<long long, std::vector<int>, CellHash> grid;
  grid.reserve(static_cast<std::size_t>(nt) * 2);
  auto for_cells = [&](int t, auto&& fn) {
    Vec3 bl{kInf, kInf, kInf}, bh{-kInf, -kInf, -kInf};
    for (int k = 0; k < 3; ++k) {
      const Vec3& p = V[T[t][k]];
      bl = {std::fmin(bl.x, p.x), std::fmin(bl.y, p.y), std::fmin(bl.z, p.z)};
      bh = {std::fmax(bh.x, p.x), std::fmax(bh.y, p.y), std::fmax(bh.z, p.z)};
    }
    for (long long ix = cell_of(bl.x, lo.x); ix <= cell_of(bh.x, lo.x); ++ix)
      for (long long iy = cell_of(bl.y, lo.y); iy <= cell_of(bh.y, lo.y); ++iy)
        for (long long iz = cell_of(bl.z, lo.z); iz <= cell_of(bh.z, lo.z); ++iz)
          fn((ix * 73856093LL) ^ (iy * 19349663LL) ^ (iz * 83492791LL));
  };
  for (int t = 0; t < nt; ++t) for_cells(t, [&](long long k) { grid[k].push_back(t); });

  auto share_vertex = [&](int a, int b) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (T[a][i] == T[b][j]) return true;
    return false;
  };
  double eps = 1e-12 * (hi - lo).norm();
  std::unordered_set<long long> tested;
  long hits = 0;
  for (const auto& [key, list] : grid) {
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        int a = std::min(list[i], list[j]), b = std::max(list[i], list[j]);
        long long pk = static_cast<long long>(a) * nt + b;
        if (!tested.insert(pk).second) continue;
        if (share_vertex(a, b)) continue;
        Vec3 va[3] = {V[T[a][0]], V[T[a][1]], V[T[a][2]]};
        Vec3 vb[3] = {V[T[b][0]], V[T[b][1]], V[T[b][2]]};
        if (tri_tri_intersect(va, vb, eps)) {
          if (++hits >= cap) return hits;
        }
      }
  }
  return hits;
}

namespace {

int modular_inverse(int a, int n) {
  a %= n;
  if (a < 0) a += n;
  for (int x = 1; x < n; ++x)
    if ((a * x) % n == 1) return x;
  return 0;
}

double rotation_residual(const SurfaceChart& ch, double angle, int shift_cols) {
  int nu = ch.nu(), nv = ch.nv();
  int wrap = nv - 1;
  double ca = std::cos(angle), sa = std::sin(angle);
  double worst = 0;
  for (int iu = 0; iu < nu; iu += 2)
    for (int iv = 0; iv < wrap; iv += 2) {
      const Vec3& p = ch.at(iu, iv);
      Vec3 rp{ca * p.x - sa * p.y, sa * p.x + ca * p.y, p.z};
      const Vec3& q = ch.at(iu, (iv + shift_cols) % wrap);
      worst = std::fmax(worst, (rp - q).norm());
    }
  return worst;
}

}  // namespace

VerificationReport verify_chart(const SurfaceChart& chart, const Expectations& expect,
                                const VerifyThresholds& th, const GridConfig& grid) {
  const int nu = chart.nu(), nv = chart.nv();
  if (nu < grid.min_nu || nv < grid.min_nv)
    fail(ErrorKind::GridTooCoarse, "verification grid below the configured minimum");
  VerificationReport rep;

  // ---- mean curvature from raw second differences ----
  double du = chart.u_grid[1] - chart.u_grid[0];
  double dv = chart.v_grid[1] - chart.v_grid[0];
  auto P = [&](int iu, int iv) -> const Vec3& {
    if (chart.closed_v) {
      int w = nv - 1;
      iv = ((iv % w) + w) % w;
    }
    return chart.at(iu, iv);
  };
  int iv_lo = chart.closed_v ? 0 : 1;
  int iv_hi = chart.closed_v ? nv - 1 : nv - 1;
  double hmax = 0;
  for (int iu = 1; iu + 1 < nu; ++iu) {
    for (int iv = iv_lo; iv < iv_hi; ++iv) {
      Vec3 pu = (P(iu + 1, iv) - P(iu - 1, iv)) / (2 * du);
      Vec3 pv = (P(iu, iv + 1) - P(iu, iv - 1)) / (2 * dv);
      Vec3 puu = (P(iu + 1, iv) - 2.0 * P(iu, iv) + P(iu - 1, iv)) / (du * du);
      Vec3 pvv = (P(iu, iv + 1) - 2.0 * P(iu, iv) + P(iu, iv - 1)) / (dv * dv);
      Vec3 puv = (P(iu + 1, iv + 1) - P(iu + 1, iv - 1) - P(iu - 1, iv + 1) +
                  P(iu - 1, iv - 1)) /
                 (4 * du * dv);
      Vec3 n = pu.cross(pv);
      double nn = n.norm();
      if (nn < 1e-300) continue;
      n = n / nn;
      double E = pu.dot(pu), F = pu.dot(pv), G = pv.dot(pv);
      double L = puu.dot(n), M = puv.dot(n), N = pvv.dot(n);
      double H = (E * N - 2 * F * M + G * L) / (2 * (E * G - F * F));
      hmax = std::fmax(hmax, std::fabs(H));
    }
  }
  rep.mean_curvature_max = hmax;

  // ---- per-u-line sphere fits and boundary angles ----
  double max_fit = 0;
  int mid = (nu - 1) / 2;
  for (int iu = 0; iu < nu; ++iu) {
    std::vector<Vec3> row;
    row.reserve(nv);
    for (int iv = 0; iv < nv - (chart.closed_v ? 1 : 0); ++iv)
      row.push_back(chart.at(iu, iv));
    SphereFit fit = fit_sphere(row);
    if (!fit.is_plane) max_fit = std::fmax(max_fit, fit.residual);
    if (iu == 0 || iu == nu - 1) {
      int side = iu == 0 ? 0 : 1;
      rep.boundary_sphere_radius[side] = fit.is_plane ? kInf : fit.radius;
      rep.boundary_sphere_center_dist[side] = fit.is_plane ? kInf : fit.center.norm();
      double unit_dev = 0;
      for (const auto& p : row) unit_dev = std::fmax(unit_dev, std::fabs(p.norm() - 1));
      rep.boundary_unit_dist[side] = unit_dev;
      // against the unit sphere when the boundary sits on it; a rotational
      // boundary circle is coplanar and its row fit fixes no sphere center
      bool against_ball = unit_dev < 1e-3;
      double mean = 0;
      std::vector<double> angles;
      for (int iv = 0; iv < nv - 1; ++iv) {
        const Vec3& p = chart.at(iu, iv);
        Vec3 rad = against_ball
                       ? p.normalized()
                       : (fit.is_plane ? fit.plane_normal : (p - fit.center).normalized());
        double c = std::fmax(-1.0, std::fmin(1.0, rad.dot(chart.normal[chart.index(iu, iv)])));
        double ang = std::acos(c);
        angles.push_back(ang);
        mean += ang;
      }
      mean /= angles.size();
      double dev = 0, orto = 0;
      for (double a : angles) {
        dev = std::fmax(dev, std::fabs(a - mean));
        orto = std::fmax(orto, std::fabs(kPi / 2 - a));
      }
      rep.boundary[side] = {mean, dev, orto};
    }
  }
  rep.sphere_fit_max_residual = max_fit;

  // ---- closure ----
  if (chart.closed_v) {
    double worst = 0;
    for (int iu = 0; iu < nu; ++iu)
      worst = std::fmax(worst, (chart.at(iu, 0) - chart.at(iu, nv - 1)).norm());
    rep.closure_residual = worst;
  }

  // ---- symmetries from the expectations ----
  // The grid correspondences v <-> V - v need the full period, so the
  // reflection residuals are only meaningful on closed charts.
  if (chart.closed_v) {
    double worst = 0;  // x2 -> -x2 together with v -> V - v
    for (int iu = 0; iu < nu; iu += 2)
      for (int iv = 0; iv < nv; iv += 2) {
        const Vec3& p = chart.at(iu, iv);
        Vec3 rp{p.x, -p.y, p.z};
        worst = std::fmax(worst, (rp - chart.at(iu, nv - 1 - iv)).norm());
      }
    rep.symmetry_residuals["reflect_x2"] = worst;
  }
  if (chart.closed_v) {
    double worst = 0;  // x3 -> -x3 together with u -> -u
    for (int iu = 0; iu < nu; iu += 2)
      for (int iv = 0; iv < nv; iv += 2) {
        const Vec3& p = chart.at(iu, iv);
        Vec3 rp{p.x, p.y, -p.z};
        worst = std::fmax(worst, (rp - chart.at(nu - 1 - iu, iv)).norm());
      }
    rep.symmetry_residuals["reflect_x3"] = worst;
  }
  if (expect.n > 1 && chart.closed_v && chart.periods == expect.n) {
    int pp = (nv - 1) / chart.periods;  // grid columns per lattice period
    double base = 2 * kPi * expect.m / expect.n;
    double rplus = rotation_residual(chart, base, pp);
    double rminus = rotation_residual(chart, -base, pp);
    double sign = rplus <= rminus ? 1.0 : -1.0;
    int minv = modular_inverse(expect.m, expect.n);
    for (int k = 1; k < expect.n; ++k) {
      // rotation by sign*2 pi k/n corresponds to k*m^{-1} period shifts
      int j = (k * minv) % expect.n;
      double res = rotation_residual(chart, sign * 2 * kPi * k / expect.n, j * pp);
      rep.symmetry_residuals["rot_" + std::to_string(k)] = res;
    }
  }

  // ---- Gauss-map winding along the central line ----
  {
    double total = 0;
    double prev = std::atan2(chart.normal[chart.index(mid, 0)].y,
                             chart.normal[chart.index(mid, 0)].x);
    for (int iv = 1; iv < nv; ++iv) {
      const Vec3& n = chart.normal[chart.index(mid, iv)];
      double a = std::atan2(n.y, n.x);
      double d = a - prev;
      while (d > kPi) d -= 2 * kPi;
      while (d < -kPi) d += 2 * kPi;
      total += d;
      prev = a;
    }
    rep.winding_number = static_cast<int>(std::lround(std::fabs(total) / (2 * kPi)));
  }

  // ---- central geodesic convexity and turning number ----
  if (chart.closed_v) {
    int w = nv - 1;
    bool convex = true;
    double turn = 0;
    double prev_ang = 0;
    bool first = true;
    double sign_ref = 0;
    for (int iv = 0; iv < w; ++iv) {
      const Vec3& a = P(mid, iv);
      const Vec3& b = P(mid, iv + 1);
      const Vec3& c = P(mid, iv + 2);
      Vec3 e1 = b - a, e2 = c - b;
      double cross = e1.x * e2.y - e1.y * e2.x;
      if (sign_ref == 0 && std::fabs(cross) > 1e-14) sign_ref = cross > 0 ? 1 : -1;
      else if (cross * sign_ref < 0) convex = false;
      double ang = std::atan2(e1.y, e1.x);
      if (!first) {
        double d = ang - prev_ang;
        while (d > kPi) d -= 2 * kPi;
        while (d < -kPi) d += 2 * kPi;
        turn += d;
      }
      first = false;
      prev_ang = ang;
    }
    rep.geodesic_convex = convex;
    rep.geodesic_turning = static_cast<int>(std::lround(std::fabs(turn) / (2 * kPi)));
  }

  if (expect.probe_self_intersection) rep.self_intersections = self_intersection_probe(chart);

  // ---- threshold verdicts ----
  rep.passed["sphere_fit"] = rep.sphere_fit_max_residual < th.sphere_fit;
  rep.passed["mean_curvature"] = rep.mean_curvature_max < th.mean_curvature;
  if (chart.closed_v) rep.passed["closure"] = rep.closure_residual < th.closure;
  for (const auto& [k, v] : rep.symmetry_residuals) rep.passed["sym_" + k] = v < th.symmetry;
  if (expect.kind == Expectations::Kind::FreeBoundary) {
    for (int s = 0; s < 2; ++s) {
      rep.passed[s == 0 ? "orthogonal_boundary_0" : "orthogonal_boundary_1"] =
          rep.boundary[s].orthogonality_residual < th.orthogonality;
      rep.passed[s == 0 ? "unit_boundary_sphere_0" : "unit_boundary_sphere_1"] =
          rep.boundary_unit_dist[s] < th.boundary_sphere;
    }
    if (expect.m > 0) rep.passed["winding"] = rep.winding_number == expect.m;
  } else if (expect.kind == Expectations::Kind::Capillary) {
    for (int s = 0; s < 2; ++s) {
      rep.passed[s == 0 ? "constant_angle_0" : "constant_angle_1"] =
          rep.boundary[s].max_dev < th.angle_dev;
      rep.passed[s == 0 ? "unit_boundary_sphere_0" : "unit_boundary_sphere_1"] =
          rep.boundary_unit_dist[s] < th.boundary_sphere;
    }
    rep.passed["convex_geodesic"] = rep.geodesic_convex && rep.geodesic_turning == 1;
  }
  return rep;
}

// ----- analytic oracles -----

double critical_catenoid_parameter() {
  return brent([](double t) { return t * std::tanh(t) - 1; }, 1.0, 1.5, 1e-15);
}

SurfaceChart catenoid_chart(double neck, double t_max, int nu, int nv) {
  SurfaceChart ch;
  ch.closed_v = true;
  ch.periods = 1;
  ch.m = ch.n = 1;
  ch.u_grid.resize(nu);
  ch.v_grid.resize(nv);
  for (int i = 0; i < nu; ++i) ch.u_grid[i] = -t_max + 2 * t_max * i / (nu - 1);
  for (int j = 0; j < nv; ++j) ch.v_grid[j] = 2 * kPi * j / (nv - 1);
  ch.psi.resize(static_cast<std::size_t>(nu) * nv);
  ch.normal.resize(ch.psi.size());
  ch.conf.resize(ch.psi.size());
  for (int i = 0; i < nu; ++i) {
    double t = ch.u_grid[i];
    for (int j = 0; j < nv; ++j) {
      double th = ch.v_grid[j];
      int id = ch.index(i, j);
      ch.psi[id] = {neck * std::cosh(t) * std::cos(th),
                    neck * std::cosh(t) * std::sin(th), neck * t};
      ch.normal[id] = {std::cos(th) / std::cosh(t), std::sin(th) / std::cosh(t),
                       -std::tanh(t)};
      ch.conf[id] = neck * std::cosh(t);
    }
  }
  return ch;
}

SurfaceChart critical_catenoid_chart(int nu, int nv) {
  double t0 = critical_catenoid_parameter();
  double c = 1.0 / std::sqrt(std::cosh(t0) * std::cosh(t0) + t0 * t0);
  return catenoid_chart(c, t0, nu, nv);
}

SurfaceChart flat_disk_chart(double rho0, int nu, int nv) {
  SurfaceChart ch;
  ch.closed_v = true;
  ch.periods = 1;
  ch.m = ch.n = 1;
  ch.u_grid.resize(nu);
  ch.v_grid.resize(nv);
  for (int i = 0; i < nu; ++i) ch.u_grid[i] = rho0 + (1 - rho0) * i / (nu - 1);
  for (int j = 0; j < nv; ++j) ch.v_grid[j] = 2 * kPi * j / (nv - 1);
  ch.psi.resize(static_cast<std::size_t>(nu) * nv);
  ch.normal.resize(ch.psi.size());
  ch.conf.resize(ch.psi.size());
  for (int i = 0; i < nu; ++i) {
    double rho = ch.u_grid[i];
    for (int j = 0; j < nv; ++j) {
      double th = ch.v_grid[j];
      int id = ch.index(i, j);
      ch.psi[id] = {rho * std::cos(th), rho * std::sin(th), 0.0};
      ch.normal[id] = {0, 0, 1};
      ch.conf[id] = rho;
    }
  }
  return ch;
}

}  // namespace annuli
