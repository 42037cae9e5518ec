// Command-line front end: constructs and certifies the minimal annuli in the
// unit ball that the core library produces from (r1, r2), and exports meshes,
// curves and reports.

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <string>

#include "CLI11.hpp"

#include "annuli/annulus.hpp"
#include "annuli/error.hpp"
#include "annuli/hamiltonian.hpp"
#include "annuli/io.hpp"
#include "annuli/mesh.hpp"
#include "annuli/period.hpp"
#include "annuli/verify.hpp"

namespace fs = std::filesystem;
using namespace annuli;

namespace {

int exit_code_for(const Error& e) { return e.is_domain() ? 2 : 3; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::IoError, "cannot write " + path);
  out << text << "\n";
}

void write_sidecar(const std::string& dir) {
  // timestamps live here, never inside the deterministic outputs
  std::ofstream out(dir + "/run.meta.txt");
  out << "generated_at_unix " << std::time(nullptr) << "\n";
}

void export_solution(const AnnulusSolution& sol, const std::string& dir) {
  fs::create_directories(dir);
  write_text(dir + "/report.json", solution_json(sol));
  Mesh mesh = mesh_from_chart(sol.chart, true);
  write_obj(mesh, dir + "/annulus.obj");
  write_ply_binary(mesh, dir + "/annulus.ply");
  write_chart_json(sol.chart, dir + "/chart.json");
  write_sidecar(dir);
}

bool parse_fraction(const std::string& s, int& m, int& n) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return false;
  try {
    m = std::stoi(s.substr(0, slash));
    n = std::stoi(s.substr(slash + 1));
  } catch (...) {
    return false;
  }
  return m > 0 && n > 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free-boundary and capillary minimal annuli in the unit ball"};
  app.require_subcommand(1);

  JobConfig cfg = config_from_env();
  std::string config_path;
  app.add_option("--config", config_path, "key = value config file");
  app.add_option("--threads", cfg.threads, "worker threads (0 = auto)");
  app.add_option("--grid-u", cfg.grid.nu, "chart samples across u");
  app.add_option("--grid-v", cfg.grid.nv_per_period, "chart samples per lattice period");
  app.add_option("--tol", cfg.tol.precision, "global precision target");

  auto* c_const = app.add_subcommand("constants", "print the distinguished constants");

  double r1 = 0, r2 = 0;
  auto* c_per = app.add_subcommand("per", "evaluate the period map at (r1, r2)");
  c_per->add_option("--r1", r1)->required();
  c_per->add_option("--r2", r2)->required();

  double level_c = 0, dmin = -2.0;
  std::string out_path = "level.csv";
  auto* c_trace = app.add_subcommand("trace-level", "trace a level curve of the period map");
  c_trace->add_option("--c", level_c, "level value in (0,1)")->required();
  c_trace->add_option("--dmin", dmin, "stop at r1 - r2 = dmin");
  c_trace->add_option("--out", out_path, "CSV output path");

  auto* c_phase = app.add_subcommand("phase-portrait", "export the distinguished (s,t) orbit");
  c_phase->add_option("--r1", r1)->required();
  c_phase->add_option("--r2", r2)->required();
  c_phase->add_option("--out", out_path, "CSV output path");

  auto* c_height = app.add_subcommand("height", "height map at (r1, r2) in Omega_0");
  c_height->add_option("--r1", r1)->required();
  c_height->add_option("--r2", r2)->required();

  std::string period = "3/5", out_dir = "out";
  auto* c_solve = app.add_subcommand("solve-annulus",
                                     "free-boundary minimal annulus of rational period");
  c_solve->add_option("--period", period, "target period m/n")->required();
  c_solve->add_option("--out", out_dir, "output directory");
  c_solve->add_option("--dmin", cfg.search.d_min, "search range in d = r1 - r2");

  int cap_n = 4;
  double cap_d = -0.05;
  auto* c_cap = app.add_subcommand("capillary", "capillary minimal annulus from Per = 1/n");
  c_cap->add_option("--n", cap_n, "rotation order (>= 2)")->required();
  c_cap->add_option("--d", cap_d, "position r1 - r2 <= 0 along the level curve");
  c_cap->add_option("--out", out_dir, "output directory");

  double strip_c = 0.61;
  int strip_periods = 3;
  auto* c_strip =
      app.add_subcommand("strip", "non-compact free-boundary strip (no quotient)");
  c_strip->add_option("--c", strip_c, "period level in (0,1), rational not required");
  c_strip->add_option("--periods", strip_periods, "lattice periods to sample");
  c_strip->add_option("--out", out_dir, "output directory");

  std::string chart_path, kind = "free_boundary";
  int exp_m = 0, exp_n = 0;
  auto* c_verify = app.add_subcommand("verify", "re-verify a chart.json");
  c_verify->add_option("--chart", chart_path)->required();
  c_verify->add_option("--kind", kind, "free_boundary | capillary | strip");
  c_verify->add_option("--m", exp_m);
  c_verify->add_option("--n", exp_n);

  std::string mesh_format = "obj";
  auto* c_export = app.add_subcommand("export-mesh", "convert a chart.json to a mesh file");
  c_export->add_option("--chart", chart_path)->required();
  c_export->add_option("--format", mesh_format, "obj | ply | plyb");
  c_export->add_option("--out", out_path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints the message or requested help text
    return code == 0 ? 0 : 1;
  }

  try {
    if (!config_path.empty()) cfg = load_config(config_path);

    if (app.got_subcommand(c_const)) {
      double rs = solve_r_sharp(cfg.tol);
      double rstar = solve_r_star(cfg.tol);
      double x0 = coth_fixed_point();
      double perstar = per(rstar, rstar, cfg.tol);
      std::printf("r_sharp    = %.10f  (root of theta(x) = -1 on (-2^(1/3), -1);\n"
                  "             branch switch of the diagonal crossing value)\n", rs);
      std::printf("r_star     = %.10f  (zero of the diagonal height -r^2(T - coth T);\n"
                  "             endpoint of the free-boundary nodal curve)\n", rstar);
      std::printf("Per(r*,r*) = %.10f  (period level at the nodal endpoint, 1/sqrt(1-r*^3))\n",
                  perstar);
      std::printf("x0         = %.10f  (negative root of x = coth x; |x0| is the critical\n"
                  "             catenoid clip parameter, t tanh t = 1)\n", x0);
      return 0;
    }
    if (app.got_subcommand(c_per)) {
      std::printf("%.10f\n", per(r1, r2, cfg.tol));
      return 0;
    }
    if (app.got_subcommand(c_trace)) {
      LevelCurve lc = trace_level(level_c, dmin, cfg.tol, cfg.search);
      write_level_curve_csv(lc, out_path);
      std::printf("traced %zu points to %s%s\n", lc.points.size(), out_path.c_str(),
                  lc.hit_w_boundary ? " (stopped at the W boundary)" : "");
      return 0;
    }
    if (app.got_subcommand(c_phase)) {
      SpectralParams sp = derive_spectral(r1, r2, cfg.tol);
      StOrbit orb = trace_orbit_gamma0(sp, cfg.tol);
      write_orbit_csv(orb, out_path);
      std::printf("exported %zu samples to %s%s\n", orb.samples.size(), out_path.c_str(),
                  orb.vertex_hit ? " (vertex pass within tolerance)" : "");
      return 0;
    }
    if (app.got_subcommand(c_height)) {
      HeightSample h = height(r1, r2, cfg.tol);
      std::printf("{\"r1\": %.12g, \"r2\": %.12g, \"tau\": %.12g, \"h\": %.12g}\n", h.r1,
                  h.r2, h.tau, h.h_value);
      return 0;
    }
    if (app.got_subcommand(c_solve)) {
      int m, n;
      if (!parse_fraction(period, m, n)) {
        std::fprintf(stderr, "bad --period, expected m/n\n");
        return 1;
      }
      AnnulusSolution sol = solve_free_boundary(m, n, cfg);
      export_solution(sol, out_dir);
      std::printf("solved %d/%d at (r1, r2) = (%.9f, %.9f), tau = %.9f\n", m, n, sol.r1,
                  sol.r2, sol.tau_or_ustar);
      std::printf("symmetry %s, winding %d, self-intersections %ld, checks %s\n",
                  symmetry_group_name(sol).c_str(), sol.report.winding_number,
                  sol.report.self_intersections,
                  sol.report.all_passed() ? "passed" : "FAILED");
      return sol.report.all_passed() ? 0 : 3;
    }
    if (app.got_subcommand(c_cap)) {
      AnnulusSolution sol = build_capillary(cap_n, cap_d, cfg);
      export_solution(sol, out_dir);
      std::printf("capillary n = %d at d = %.6f: angle = %.9f rad, ustar = %.9f\n", cap_n,
                  cap_d, sol.boundary_angle, sol.tau_or_ustar);
      std::printf("symmetry %s (order %d), self-intersections %ld, checks %s\n",
                  symmetry_group_name(sol).c_str(), 4 * cap_n, sol.report.self_intersections,
                  sol.report.all_passed() ? "passed" : "FAILED");
      return sol.report.all_passed() ? 0 : 3;
    }
    if (app.got_subcommand(c_strip)) {
      AnnulusSolution sol = build_strip(strip_c, strip_periods, cfg);
      export_solution(sol, out_dir);
      std::printf("strip at level %.6f: (r1, r2) = (%.9f, %.9f), non-compact chart over %d "
                  "periods\n", strip_c, sol.r1, sol.r2, strip_periods);
      return 0;
    }
    if (app.got_subcommand(c_verify)) {
      SurfaceChart ch = read_chart_json(chart_path);
      Expectations ex;
      ex.kind = kind == "capillary"
                    ? Expectations::Kind::Capillary
                    : (kind == "strip" ? Expectations::Kind::Strip
                                       : Expectations::Kind::FreeBoundary);
      ex.m = exp_m > 0 ? exp_m : ch.m;
      ex.n = exp_n > 0 ? exp_n : ch.n;
      VerificationReport rep = verify_chart(ch, ex, {}, cfg.grid);
      std::printf("%s\n", report_json(rep).c_str());
      return rep.all_passed() ? 0 : 3;
    }
    if (app.got_subcommand(c_export)) {
      SurfaceChart ch = read_chart_json(chart_path);
      Mesh mesh = mesh_from_chart(ch, true);
      if (mesh_format == "obj") write_obj(mesh, out_path);
      else if (mesh_format == "ply") write_ply_ascii(mesh, out_path);
      else if (mesh_format == "plyb") write_ply_binary(mesh, out_path);
      else {
        std::fprintf(stderr, "unknown mesh format %s\n", mesh_format.c_str());
        return 1;
      }
      std::printf("wrote %zu vertices, %zu triangles to %s\n", mesh.vertices.size(),
                  mesh.triangles.size(), out_path.c_str());
      return 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 1;
}
