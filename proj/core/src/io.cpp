#include "annuli/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "annuli/error.hpp"

namespace annuli {

using ordered_json = nlohmann::ordered_json;

void apply_config_line(JobConfig& cfg, const std::string& key, const std::string& value) {
  auto num = [&](double& slot) { slot = std::stod(value); };
  auto inum = [&](int& slot) { slot = std::stoi(value); };
  if (key == "precision.target") num(cfg.tol.precision);
  else if (key == "precision.pole_guard") num(cfg.tol.pole_guard);
  else if (key == "precision.ode_drift") num(cfg.tol.ode_drift);
  else if (key == "precision.root_tol") num(cfg.tol.root_tol);
  else if (key == "precision.domain_boundary") num(cfg.tol.domain_boundary);
  else if (key == "grid.nu") inum(cfg.grid.nu);
  else if (key == "grid.nv_per_period") inum(cfg.grid.nv_per_period);
  else if (key == "search.d_min") num(cfg.search.d_min);
  else if (key == "search.level_scan") inum(cfg.search.level_scan);
  else if (key == "search.cont_step") num(cfg.search.cont_step);
  else if (key == "search.cont_step_max") num(cfg.search.cont_step_max);
  else if (key == "threads") inum(cfg.threads);
  else fail(ErrorKind::IoError, "unknown config key: " + key);
  if (cfg.tol.precision <= 0 || cfg.tol.pole_guard <= 0 || cfg.tol.ode_drift <= 0 ||
      cfg.tol.root_tol <= 0)
    fail(ErrorKind::IoError, "tolerances must be positive");
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoError, "cannot open config " + path);
  JobConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r\"");
      auto e = s.find_last_not_of(" \t\r\"");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!key.empty()) apply_config_line(cfg, key, value);
  }
  return cfg;
}

JobConfig config_from_env() {
  const char* p = std::getenv("ANNULI_CONFIG");
  if (p && *p) {
    std::ifstream probe(p);
    if (probe) return load_config(p);
  }
  return {};
}

namespace {
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}
}  // namespace

void write_level_curve_csv(const LevelCurve& curve, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) fail(ErrorKind::IoError, "cannot open " + path + " for writing");
  std::fprintf(f, "c,r1,r2,per_residual\n");
  for (const auto& p : curve.points)
    std::fprintf(f, "%s,%s,%s,%s\n", fmt(curve.c).c_str(), fmt(p.r1).c_str(),
                 fmt(p.r2).c_str(), fmt(p.per_residual).c_str());
  std::fclose(f);
}

void write_orbit_csv(const StOrbit& orbit, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) fail(ErrorKind::IoError, "cannot open " + path + " for writing");
  std::fprintf(f, "lambda,s,t,phase\n");
  for (const auto& s : orbit.samples)
    std::fprintf(f, "%s,%s,%s,%s\n", fmt(s.lambda).c_str(), fmt(s.s).c_str(),
                 fmt(s.t).c_str(), s.tag == PhaseTag::R_plus ? "R+" : "R-");
  std::fclose(f);
}

namespace {
ordered_json report_to_json(const VerificationReport& rep) {
  ordered_json j;
  j["mean_curvature_max"] = rep.mean_curvature_max;
  j["sphere_fit_max_residual"] = rep.sphere_fit_max_residual;
  for (int s = 0; s < 2; ++s) {
    ordered_json b;
    b["mean_angle"] = rep.boundary[s].mean;
    b["max_angle_deviation"] = rep.boundary[s].max_dev;
    b["orthogonality_residual"] = rep.boundary[s].orthogonality_residual;
    b["sphere_radius"] = rep.boundary_sphere_radius[s];
    b["sphere_center_dist"] = rep.boundary_sphere_center_dist[s];
    b["unit_sphere_dist"] = rep.boundary_unit_dist[s];
    j[s == 0 ? "boundary_0" : "boundary_1"] = b;
  }
  j["closure_residual"] = rep.closure_residual;
  ordered_json sym;
  for (const auto& [k, v] : rep.symmetry_residuals) sym[k] = v;
  j["symmetry_residuals"] = sym;
  j["winding_number"] = rep.winding_number;
  j["geodesic_convex"] = rep.geodesic_convex;
  j["geodesic_turning"] = rep.geodesic_turning;
  j["self_intersections"] = rep.self_intersections;
  j["per_value"] = rep.per_value;
  ordered_json pass;
  for (const auto& [k, v] : rep.passed) pass[k] = v;
  j["passed"] = pass;
  j["all_passed"] = rep.all_passed();
  return j;
}
}  // namespace

std::string report_json(const VerificationReport& rep) {
  return report_to_json(rep).dump(2);
}

std::string symmetry_group_name(const AnnulusSolution& sol) {
  if (sol.kind == AnnulusKind::Strip) return "none asserted";
  std::ostringstream os;
  os << "D" << sol.n << " x Z2";
  return os.str();
}

std::string solution_json(const AnnulusSolution& sol) {
  ordered_json j;
  j["kind"] = sol.kind == AnnulusKind::FreeBoundary
                  ? "free_boundary"
                  : (sol.kind == AnnulusKind::Capillary ? "capillary" : "strip");
  j["r1"] = sol.r1;
  j["r2"] = sol.r2;
  if (sol.n > 0) j["period"] = std::to_string(sol.m) + "/" + std::to_string(sol.n);
  j["period_value"] = sol.period_value;
  j["tau_or_ustar"] = sol.tau_or_ustar;
  j["sphere_radius"] = sol.sphere_radius;
  j["boundary_angle_rad"] = sol.boundary_angle;
  j["transform"] = {{"translate", {sol.translate.x, sol.translate.y, sol.translate.z}},
                    {"scale", sol.scale}};
  j["compact"] = sol.compact;
  j["symmetry"] = symmetry_group_name(sol);
  j["grid"] = {{"nu", sol.chart.nu()}, {"nv", sol.chart.nv()}};
  j["report"] = report_to_json(sol.report);
  return j.dump(2);
}

void write_chart_json(const SurfaceChart& chart, const std::string& path) {
  ordered_json j;
  j["nu"] = chart.nu();
  j["nv"] = chart.nv();
  j["closed_v"] = chart.closed_v;
  j["periods"] = chart.periods;
  j["m"] = chart.m;
  j["n"] = chart.n;
  j["r1"] = chart.r1;
  j["r2"] = chart.r2;
  j["g_hat0"] = chart.g_hat0;
  j["u_grid"] = chart.u_grid;
  j["v_grid"] = chart.v_grid;
  auto flat = [](const std::vector<Vec3>& v) {
    std::vector<double> out;
    out.reserve(v.size() * 3);
    for (const auto& p : v) {
      out.push_back(p.x);
      out.push_back(p.y);
      out.push_back(p.z);
    }
    return out;
  };
  j["psi"] = flat(chart.psi);
  j["normal"] = flat(chart.normal);
  j["conf"] = chart.conf;
  std::ofstream out(path);
  if (!out) fail(ErrorKind::IoError, "cannot open " + path + " for writing");
  out << j.dump();
  if (!out) fail(ErrorKind::IoError, "write failed for " + path);
}

SurfaceChart read_chart_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoError, "cannot open " + path);
  ordered_json j;
  in >> j;
  SurfaceChart ch;
  ch.closed_v = j.at("closed_v").get<bool>();
  ch.periods = j.at("periods").get<int>();
  ch.m = j.at("m").get<int>();
  ch.n = j.at("n").get<int>();
  ch.r1 = j.at("r1").get<double>();
  ch.r2 = j.at("r2").get<double>();
  ch.g_hat0 = j.at("g_hat0").get<double>();
  ch.u_grid = j.at("u_grid").get<std::vector<double>>();
  ch.v_grid = j.at("v_grid").get<std::vector<double>>();
  auto unflat = [](const std::vector<double>& v) {
    std::vector<Vec3> out(v.size() / 3);
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = {v[3 * i], v[3 * i + 1], v[3 * i + 2]};
    return out;
  };
  ch.psi = unflat(j.at("psi").get<std::vector<double>>());
  ch.normal = unflat(j.at("normal").get<std::vector<double>>());
  ch.conf = j.at("conf").get<std::vector<double>>();
  if (static_cast<int>(ch.u_grid.size()) * static_cast<int>(ch.v_grid.size()) !=
      static_cast<int>(ch.psi.size()))
    fail(ErrorKind::IoError, "inconsistent chart dimensions in " + path);
  return ch;
}

}  // namespace annuli
