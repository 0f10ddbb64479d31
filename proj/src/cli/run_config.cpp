#include "tir/cli/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace tir::cli {
namespace {

constexpr std::string_view kModule = "cli_io";

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(kModule, "cannot parse " + what + " '" + s + "' as a number");
  }
}

int parse_count(const std::string& s, const std::string& what) {
  const double v = parse_double(s, what);
  if (v != std::floor(v) || v < 2 || v > 1e7) throw ConfigError(kModule, what + " must be an integer >= 2");
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

template <class E>
struct Named {
  E value;
  const char* name;
};

constexpr Named<Scenario> kScenarios[] = {
    {Scenario::field_map, "field-map"},       {Scenario::airy_sectors, "airy-sectors"},
    {Scenario::stokes_demo, "stokes-demo"},   {Scenario::goos_scan, "goos-scan"},
    {Scenario::classify_map, "classify-map"}, {Scenario::verify, "verify"},
};

}  // namespace

std::string ProfileSpec::to_string() const {
  std::string s = kind;
  for (std::size_t i = 0; i < params.size(); ++i) s += (i == 0 ? ":" : ",") + num(params[i]);
  return s;
}

const std::map<std::string, double>& tolerance_defaults() {
  // airy_rel: agreement required of ai_asymptotic in airy-sectors (ok column)
  // helmholtz_max: field-map fails when a region's residual exceeds it; 0 disables
  // boundary_eps: offset (user length units) of the field-map matching report
  static const std::map<std::string, double> d{{"airy_rel", 1e-6}, {"helmholtz_max", 0.0}, {"boundary_eps", 1e-4}};
  return d;
}

double RunConfig::tolerance(const std::string& name) const {
  if (auto it = tol.find(name); it != tol.end()) return it->second;
  return tolerance_defaults().at(name);
}

Scenario parse_scenario(const std::string& s) {
  for (const auto& e : kScenarios)
    if (s == e.name) return e.value;
  throw ConfigError(kModule, "unknown scenario '" + s + "'");
}

std::string to_string(Scenario s) {
  for (const auto& e : kScenarios)
    if (s == e.value) return e.name;
  return "?";
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw ConfigError(kModule, "format must be csv or json, got '" + s + "'");
}

std::string to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

Units parse_units(const std::string& s) {
  if (s == "lambda") return Units::lambda;
  if (s == "raw") return Units::raw;
  throw ConfigError(kModule, "units must be lambda or raw, got '" + s + "'");
}

std::string to_string(Units u) { return u == Units::lambda ? "lambda" : "raw"; }

field::GridSpec parse_grid(const std::string& s) {
  const auto axes = split(s, ',');
  if (axes.size() != 2) throw ConfigError(kModule, "grid must look like x0:x1:nx,y0:y1:ny");
  field::GridSpec g;
  for (int a = 0; a < 2; ++a) {
    const auto parts = split(axes[a], ':');
    if (parts.size() != 3) throw ConfigError(kModule, "grid must look like x0:x1:nx,y0:y1:ny");
    const double lo = parse_double(parts[0], "grid bound"), hi = parse_double(parts[1], "grid bound");
    const int cnt = parse_count(parts[2], "grid count");
    if (a == 0) {
      g.x0 = lo, g.x1 = hi, g.nx = cnt;
    } else {
      g.y0 = lo, g.y1 = hi, g.ny = cnt;
    }
  }
  return g;
}

std::string grid_to_string(const field::GridSpec& g) {
  return num(g.x0) + ":" + num(g.x1) + ":" + std::to_string(g.nx) + "," + num(g.y0) + ":" + num(g.y1) + ":" +
         std::to_string(g.ny);
}

ProfileSpec parse_profile(const std::string& s) {
  const auto colon = s.find(':');
  ProfileSpec p;
  p.kind = s.substr(0, colon);
  p.params.clear();
  if (colon != std::string::npos) {
    for (const auto& item : split(s.substr(colon + 1), ',')) p.params.push_back(parse_double(item, "profile parameter"));
  }
  std::size_t want_lo = 0, want_hi = 0;
  if (p.kind == "const") {
    want_lo = 0, want_hi = 1;
  } else if (p.kind == "gaussian") {
    want_lo = want_hi = 2;
  } else if (p.kind == "raised-cosine") {
    want_lo = want_hi = 3;
  } else {
    throw ConfigError(kModule, "unknown profile '" + p.kind + "' (const, gaussian, raised-cosine)");
  }
  if (p.params.size() < want_lo || p.params.size() > want_hi) {
    throw ConfigError(kModule, "wrong number of parameters for profile '" + p.kind + "'");
  }
  return p;
}

std::pair<std::string, double> parse_tolerance(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos) throw ConfigError(kModule, "tolerance must look like NAME=VALUE");
  const std::string name = s.substr(0, eq);
  if (!tolerance_defaults().count(name)) throw ConfigError(kModule, "unknown tolerance '" + name + "'");
  const double v = parse_double(s.substr(eq + 1), "tolerance " + name);
  if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError(kModule, "tolerance " + name + " must be finite and >= 0");
  return {name, v};
}

WavefrontProfile make_profile(const ProfileSpec& p, double L) {
  if (p.kind == "const") return WavefrontProfile::constant(p.params.empty() ? 1.0 : p.params[0]);
  if (p.kind == "gaussian") return WavefrontProfile::gaussian(p.params[0] * L, p.params[1] * L);
  if (p.kind == "raised-cosine") {
    return WavefrontProfile::raised_cosine(p.params[0] * L, p.params[1] * L, p.params[2] * L);
  }
  throw ConfigError(kModule, "unknown profile '" + p.kind + "'");
}

void validate(const RunConfig& cfg) {
  eikonal::MediumConfig(cfg.n, cfg.theta_i, cfg.k);  // throws ConfigError
  const auto& g = cfg.grid;
  if (g.nx < 2 || g.ny < 2) throw ConfigError(kModule, "grid counts must be >= 2");
  if (!(g.x1 > g.x0) || !(g.y1 > g.y0)) throw ConfigError(kModule, "grid ranges must be increasing");
  make_profile(cfg.profile, cfg.length_scale());  // parameter checks
  for (const auto& [name, v] : cfg.tol) {
    if (!tolerance_defaults().count(name)) throw ConfigError(kModule, "unknown tolerance '" + name + "'");
    if (!(v >= 0.0)) throw ConfigError(kModule, "tolerance " + name + " must be >= 0");
  }
}

nlohmann::json to_json(const RunConfig& cfg) {
  nlohmann::json j;
  j["scenario"] = to_string(cfg.scenario);
  j["n"] = cfg.n;
  j["theta_i"] = cfg.theta_i;
  j["k"] = cfg.k;
  j["grid"] = grid_to_string(cfg.grid);
  j["profile"] = cfg.profile.to_string();
  j["out"] = cfg.out;
  j["format"] = to_string(cfg.format);
  j["units"] = to_string(cfg.units);
  j["tol"] = cfg.tol;
  return j;
}

RunConfig apply_json(RunConfig c, const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError(kModule, "config file must hold a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "scenario") {
        c.scenario = parse_scenario(v.get<std::string>());
      } else if (key == "n") {
        c.n = v.get<double>();
      } else if (key == "theta_i") {
        c.theta_i = v.get<double>();
      } else if (key == "theta_i_deg") {
        c.theta_i = v.get<double>() * kPi / 180.0;
      } else if (key == "k") {
        c.k = v.get<double>();
      } else if (key == "grid") {
        c.grid = parse_grid(v.get<std::string>());
      } else if (key == "profile") {
        c.profile = parse_profile(v.get<std::string>());
      } else if (key == "out") {
        c.out = v.get<std::string>();
      } else if (key == "format") {
        c.format = parse_format(v.get<std::string>());
      } else if (key == "units") {
        c.units = parse_units(v.get<std::string>());
      } else if (key == "tol") {
        for (const auto& [name, value] : v.items()) {
          c.tol[parse_tolerance(name + "=" + num(value.get<double>())).first] = value.get<double>();
        }
      } else {
        throw ConfigError(kModule, "unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(kModule, std::string("bad value type in config: ") + e.what());
  }
  if (j.contains("theta_i") && j.contains("theta_i_deg")) {
    throw ConfigError(kModule, "give theta_i or theta_i_deg, not both");
  }
  return c;
}

std::uint64_t config_hash(const RunConfig& cfg) {
  auto j = to_json(cfg);
  j.erase("out");  // where the artifact goes does not change it
  const std::string text = j.dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv) {
  CLI::App app{"Total internal reflection: field maps, Airy/Stokes tables, Goos-Hanchen scans", "tirlab"};
  std::string config_path, scenario, grid, profile, out, format, units;
  double n = 0, theta = 0, theta_deg = 0, k = 0;
  std::vector<std::string> tols;
  app.add_option("--config", config_path, "JSON config file; flags override it");
  auto* o_scen = app.add_option("--scenario", scenario,
                                "field-map | airy-sectors | stokes-demo | goos-scan | classify-map | verify");
  auto* o_n = app.add_option("--n", n, "refractive index of the dense medium (> 1)");
  auto* o_th = app.add_option("--theta-i", theta, "angle of incidence in radians");
  auto* o_thd = app.add_option("--theta-i-deg", theta_deg, "angle of incidence in degrees");
  o_th->excludes(o_thd);
  auto* o_k = app.add_option("--k", k, "free-space wavenumber");
  auto* o_grid = app.add_option("--grid", grid, "x0:x1:nx,y0:y1:ny");
  auto* o_prof = app.add_option("--profile", profile, "const[:c] | gaussian:x0,sigma | raised-cosine:center,half,strip");
  auto* o_out = app.add_option("--out", out, "output path (default stdout)");
  auto* o_fmt = app.add_option("--format", format, "csv | json");
  auto* o_units = app.add_option("--units", units, "lambda | raw");
  app.add_option("--tol", tols, "NAME=VALUE (airy_rel, helmholtz_max, boundary_eps)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(kModule, e.what());
  }

  RunConfig c;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw IoError(kModule, "cannot open config file '" + config_path + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(kModule, "config file '" + config_path + "' is not valid JSON: " + e.what());
    }
    c = apply_json(c, j);
  }
  if (o_scen->count()) c.scenario = parse_scenario(scenario);
  if (o_n->count()) c.n = n;
  if (o_th->count()) c.theta_i = theta;
  if (o_thd->count()) c.theta_i = theta_deg * kPi / 180.0;
  if (o_k->count()) c.k = k;
  if (o_grid->count()) c.grid = parse_grid(grid);
  if (o_prof->count()) c.profile = parse_profile(profile);
  if (o_out->count()) c.out = out;
  if (o_fmt->count()) c.format = parse_format(format);
  if (o_units->count()) c.units = parse_units(units);
  for (const auto& t : tols) {
    const auto [name, v] = parse_tolerance(t);
    c.tol[name] = v;
  }
  validate(c);
  return c;
}

}  // namespace tir::cli
