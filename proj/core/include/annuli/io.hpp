#pragma once

#include <string>
#include <vector>

#include "annuli/annulus.hpp"
#include "annuli/config.hpp"
#include "annuli/hamiltonian.hpp"
#include "annuli/period.hpp"
#include "annuli/surface.hpp"
#include "annuli/verify.hpp"

namespace annuli {

// Plain key = value configuration (a TOML-compatible subset: dotted keys,
// '#' comments). Unknown keys are rejected so typos surface early.
JobConfig load_config(const std::string& path);
void apply_config_line(JobConfig& cfg, const std::string& key, const std::string& value);

// Default config path from the environment (ANNULI_CONFIG), if set and readable.
JobConfig config_from_env();

// CSV emitters (header row; fixed "%.12e" floats; no timestamps).
void write_level_curve_csv(const LevelCurve& curve, const std::string& path);
void write_orbit_csv(const StOrbit& orbit, const std::string& path);

// Deterministic JSON serialization (stable key order).
std::string report_json(const VerificationReport& rep);
std::string solution_json(const AnnulusSolution& sol);

// Chart container: JSON header + base64-free plain arrays; readable back for
// the standalone verify subcommand.
void write_chart_json(const SurfaceChart& chart, const std::string& path);
SurfaceChart read_chart_json(const std::string& path);

std::string symmetry_group_name(const AnnulusSolution& sol);

}  // namespace annuli
