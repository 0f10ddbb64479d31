#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tir/field.hpp"
#include "tir/profile.hpp"

namespace tir::cli {

enum class Scenario { field_map, airy_sectors, stokes_demo, goos_scan, classify_map, verify };
enum class Format { csv, json };
enum class Units { lambda, raw };

struct ProfileSpec {
  std::string kind = "gaussian";   // const | gaussian | raised-cosine
  std::vector<double> params{0.0, 2.0};

  std::string to_string() const;
};

/// Everything a run needs. Lengths (grid, profile parameters) are stored as
/// given; `units` says whether they are in free-space wavelengths or raw.
struct RunConfig {
  Scenario scenario = Scenario::field_map;
  double n = 1.5;
  double theta_i = kPi / 3;
  double k = 100.0;
  field::GridSpec grid{-5.0, 5.0, 201, -2.0, 2.0, 80};  // even ny: no row on y = 0
  ProfileSpec profile;
  std::string out;  // empty: stdout
  Format format = Format::csv;
  Units units = Units::lambda;
  std::map<std::string, double> tol;

  /// Length of one unit of the user's coordinates in raw units.
  double length_scale() const { return units == Units::lambda ? kTwoPi / k : 1.0; }
  double tolerance(const std::string& name) const;
};

/// Names accepted by --tol, with their defaults.
const std::map<std::string, double>& tolerance_defaults();

Scenario parse_scenario(const std::string& s);
std::string to_string(Scenario s);
Format parse_format(const std::string& s);
std::string to_string(Format f);
Units parse_units(const std::string& s);
std::string to_string(Units u);

/// "x0:x1:nx,y0:y1:ny"
field::GridSpec parse_grid(const std::string& s);
std::string grid_to_string(const field::GridSpec& g);
/// "const", "const:c", "gaussian:x0,sigma", "raised-cosine:center,half_width,strip"
ProfileSpec parse_profile(const std::string& s);
/// "NAME=VALUE"; ConfigError for unknown names.
std::pair<std::string, double> parse_tolerance(const std::string& s);

/// Profile in raw units.
WavefrontProfile make_profile(const ProfileSpec& p, double length_scale);

/// Checks invariants shared by every entry point (ConfigError).
void validate(const RunConfig& cfg);

nlohmann::json to_json(const RunConfig& cfg);
/// Applies the keys present in `j` on top of `base`.
RunConfig apply_json(RunConfig base, const nlohmann::json& j);

/// FNV-1a 64 of the canonical JSON form.
std::uint64_t config_hash(const RunConfig& cfg);

/// Command line: optional --config FILE first, then flags on top.
/// Returns std::nullopt when --help was requested (help text already printed).
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv);

}  // namespace tir::cli
