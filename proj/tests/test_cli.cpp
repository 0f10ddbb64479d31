#include <sys/wait.h>

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "test_support.hpp"
#include "tir/cli/scenarios.hpp"

using namespace tir;
using namespace tir::cli;

namespace {

std::string csv_of(const RunConfig& c) {
  std::ostringstream os;
  write_csv(os, run_scenario(c));
  return os.str();
}

int tirlab(const std::string& args) {
  const std::string cmd = std::string(TIRLAB_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::optional<RunConfig> parse(std::vector<std::string> args) {
  std::vector<const char*> argv{"tirlab"};
  for (auto& a : args) argv.push_back(a.c_str());
  return parse_command_line(static_cast<int>(argv.size()), argv.data());
}

RunConfig small_field_map() {
  RunConfig c;
  c.grid = parse_grid("-2:2:9,-1.05:0.95:6");
  c.profile = parse_profile("gaussian:0,1");
  return c;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("grid, profile and tolerance parsing") {
    const auto g = parse_grid("-1:2.5:11,-3:4:8");
    CHECK(g.x0 == -1.0);
    CHECK(g.x1 == 2.5);
    CHECK(g.nx == 11);
    CHECK(g.ny == 8);
    CHECK(parse_grid(grid_to_string(g)).y1 == 4.0);
    CHECK_THROWS_AS(parse_grid("0:1:1,0:1:5"), ConfigError);
    CHECK_THROWS_AS(parse_grid("0:1:5"), ConfigError);
    CHECK(parse_profile("raised-cosine:0,1,0.25").params.size() == 3);
    CHECK(parse_profile("const").params.empty());
    CHECK_THROWS_AS(parse_profile("gaussian:1"), ConfigError);
    CHECK_THROWS_AS(parse_profile("sinc:1,2"), ConfigError);
    CHECK(parse_tolerance("airy_rel=1e-8").second == 1e-8);
    CHECK_THROWS_AS(parse_tolerance("made_up=1"), ConfigError);
  }

  TEST_CASE("flags override the config file") {
    const auto path = std::filesystem::temp_directory_path() / "tirlab_test_config.json";
    {
      std::ofstream f(path);
      f << R"({"scenario": "goos-scan", "n": 2.0, "theta_i_deg": 60, "k": 50, "tol": {"airy_rel": 1e-4}})";
    }
    const auto c = parse({"--config", path.string(), "--n", "2.4", "--format", "json"});
    REQUIRE(c);
    CHECK(c->scenario == Scenario::goos_scan);
    CHECK(c->n == 2.4);
    CHECK(c->k == 50.0);
    CHECK(c->theta_i == doctest::Approx(kPi / 3));
    CHECK(c->format == Format::json);
    CHECK(c->tolerance("airy_rel") == 1e-4);
    CHECK_THROWS_AS(parse({"--theta-i", "1", "--theta-i-deg", "50"}), ConfigError);
    CHECK_THROWS_AS(parse({"--tol", "bogus=1"}), ConfigError);
    CHECK_THROWS_AS(apply_json(RunConfig{}, nlohmann::json::parse(R"({"colour": 1})")), ConfigError);
    std::filesystem::remove(path);
  }

  TEST_CASE("config hash ignores the output path only") {
    RunConfig a, b;
    b.out = "somewhere.csv";
    CHECK(config_hash(a) == config_hash(b));
    b.k = 101.0;
    CHECK(config_hash(a) != config_hash(b));
  }

  TEST_CASE("identical configs give byte-identical output") {
    const auto c = small_field_map();
    const std::string a = csv_of(c), b = csv_of(c);
    CHECK(a == b);
    CHECK(a.rfind("# {", 0) == 0);
    CHECK(a.find("config_hash") != std::string::npos);
    CHECK(a.find("\r") == std::string::npos);
  }

  TEST_CASE("JSON output round-trips bit-exactly") {
    RunConfig c = small_field_map();
    for (auto scen : {Scenario::field_map, Scenario::classify_map, Scenario::goos_scan}) {
      c.scenario = scen;
      // the classify grid has a y = 0 row, whose jacobian is NaN
      c.grid = parse_grid(scen == Scenario::classify_map ? "-1:1:5,-1:1:5" : "-2:2:9,-1.05:0.95:6");
      const Table t = run_scenario(c);
      std::ostringstream os;
      write_json(os, t);
      const Table back = read_json(os.str());
      REQUIRE(back.rows.size() == t.rows.size());
      CHECK(back.columns == t.columns);
      CHECK(back.meta == t.meta);
      bool same = true;
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        for (std::size_t k = 0; k < t.columns.size(); ++k) {
          const auto& x = t.rows[r][k];
          const auto& y = back.rows[r][k];
          if (const auto* d = std::get_if<double>(&x)) {
            const auto* e = std::get_if<double>(&y);
            same = same && e && (std::isnan(*d) ? std::isnan(*e) : std::memcmp(d, e, sizeof(double)) == 0);
          } else {
            same = same && x == y;
          }
        }
      }
      CHECK(same);
    }
  }

  TEST_CASE("goos-scan schema and units") {
    RunConfig c;
    c.scenario = Scenario::goos_scan;
    const Table t = run_scenario(c);
    CHECK(t.columns == std::vector<std::string>{"theta_i", "delta", "d_delta_d_theta", "x_bar", "d"});
    REQUIRE(t.rows.size() == 50u);
    const double th0 = std::get<double>(t.rows.front()[0]);
    CHECK(th0 == doctest::Approx(std::asin(1 / 1.5) + 0.01));
    // lambda units: x_bar is dimensionless and independent of k
    c.k = 400.0;
    const Table u = run_scenario(c);
    CHECK(std::get<double>(u.rows[10][3]) == doctest::Approx(std::get<double>(t.rows[10][3])).epsilon(1e-12));
  }

  TEST_CASE("airy-sectors table") {
    RunConfig c;
    c.scenario = Scenario::airy_sectors;
    const Table t = run_scenario(c);
    CHECK(t.rows.size() == 360u);
    CHECK(t.meta.at("failures").get<int>() == 0);
  }

  TEST_CASE("stokes-demo jump matches the switched term") {
    RunConfig c;
    c.scenario = Scenario::stokes_demo;
    const Table t = run_scenario(c);
    const double first = std::get<double>(t.rows.front().back());
    const double last = std::get<double>(t.rows.back().back());
    CHECK(last < first);
    CHECK(last < 1e-2);
  }

  TEST_CASE("exit codes") {
    CHECK(tirlab("--scenario goos-scan") == ExitCode::ok);
    CHECK(tirlab("--grid -1:1:5,-1:1:6") == ExitCode::ok);
    CHECK(tirlab("--scenario nope") == ExitCode::config_error);
    CHECK(tirlab("--n 0.9") == ExitCode::config_error);
    CHECK(tirlab("--tol made_up=1") == ExitCode::config_error);
    // shadow rows below the critical angle
    CHECK(tirlab("--theta-i 0.3 --grid -1:1:4,-1:-0.5:3") == ExitCode::domain_error);
    // an interface row is rejected
    CHECK(tirlab("--grid -1:1:4,-1:1:3") == ExitCode::domain_error);
    CHECK(tirlab("--grid -1:1:41,0.5:1.5:41 --tol helmholtz_max=1e-9") == ExitCode::tolerance_error);
    CHECK(tirlab("--scenario goos-scan --out /nonexistent-dir/x.csv") == ExitCode::io_error);
    CHECK(tirlab("--config /nonexistent-dir/c.json") == ExitCode::io_error);
  }
}
