#include "tir/cli/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "tir/airy.hpp"
#include "tir/borel.hpp"
#include "tir/goos.hpp"
#include "tir/kernels.hpp"
#include "tir/verify/acceptance.hpp"

namespace tir::cli {
namespace {

constexpr std::string_view kModule = "cli_io";

using eikonal::MediumConfig;

std::string hash_text(const RunConfig& cfg) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(config_hash(cfg)));
  return buf;
}

Table start_table(const RunConfig& cfg, std::vector<std::string> columns) {
  Table t;
  t.columns = std::move(columns);
  auto conf = to_json(cfg);
  conf.erase("out");
  t.meta["tool"] = "tirlab";
  t.meta["scenario"] = to_string(cfg.scenario);
  t.meta["config"] = conf;
  t.meta["config_hash"] = hash_text(cfg);
  return t;
}

// User coordinates along an axis, computed in user units so that the written
// values are the ones implied by the grid string.
double axis(double lo, double hi, int count, int i) { return lo + (hi - lo) * i / (count - 1); }

field::GridSpec raw_grid(const RunConfig& cfg) {
  const double L = cfg.length_scale();
  auto g = cfg.grid;
  g.x0 *= L, g.x1 *= L, g.y0 *= L, g.y1 *= L;
  return g;
}

// Sub-grid of the rows strictly on one side of y = 0, or nullopt when it is
// too thin for the stencil.
std::optional<field::GridSpec> side_rows(const field::GridSpec& g, bool upper) {
  int first = -1, last = -1;
  for (int j = 0; j < g.ny; ++j) {
    const double y = g.y(j);
    if (upper ? y > 0.0 : y < 0.0) {
      if (first < 0) first = j;
      last = j;
    }
  }
  if (first < 0 || last - first + 1 < 2 * kernels::kStencilRadius + 1) return std::nullopt;
  auto s = g;
  s.y0 = g.y(first), s.y1 = g.y(last), s.ny = last - first + 1;
  return s;
}

Table field_map(const RunConfig& cfg) {
  const MediumConfig med(cfg.n, cfg.theta_i, cfg.k);
  const auto f1 = make_profile(cfg.profile, cfg.length_scale());
  const Complex psi0 = std::sqrt(cfg.k);
  const auto spec = raw_grid(cfg);
  const auto grid = field::synthesize(med, f1, psi0, spec);

  Table t = start_table(cfg, {"x", "y", "region", "psi_re", "psi_im", "abs_psi"});
  t.meta["wavelength"] = kTwoPi / cfg.k;
  t.meta["psi0"] = psi0.real();
  if (med.supercritical()) t.meta["reflection_phase"] = field::reflection_phase(med).delta;

  for (int j = 0; j < spec.ny; ++j) {
    for (int i = 0; i < spec.nx; ++i) {
      const Complex v = grid.at(i, j);
      t.add_row({axis(cfg.grid.x0, cfg.grid.x1, cfg.grid.nx, i), axis(cfg.grid.y0, cfg.grid.y1, cfg.grid.ny, j),
                 std::string(eikonal::to_string(grid.regions[static_cast<std::size_t>(j) * spec.nx + i])), v.real(),
                 v.imag(), std::abs(v)});
    }
  }

  if (med.supercritical() && spec.y0 < 0.0 && spec.y1 > 0.0) {
    std::vector<double> xs;
    for (int i = 0; i < spec.nx; ++i) xs.push_back(spec.x(i));
    const auto rep = field::boundary_match(med, f1, psi0, xs, cfg.tolerance("boundary_eps") * cfg.length_scale());
    t.meta["boundary"] = {{"epsilon", rep.epsilon},
                          {"max_value_mismatch", rep.max_value_mismatch},
                          {"max_derivative_mismatch", rep.max_derivative_mismatch}};
  }

  const double hmax = cfg.tolerance("helmholtz_max");
  if (hmax > 0.0) {
    for (bool upper : {true, false}) {
      const auto sub = side_rows(spec, upper);
      if (!sub) continue;
      const double r = field::helmholtz_residual(field::synthesize(med, f1, psi0, *sub));
      t.meta[upper ? "helmholtz_illuminated" : "helmholtz_shadow"] = r;
      if (r > hmax) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s Helmholtz residual %.3e exceeds helmholtz_max = %.3e",
                      upper ? "illuminated" : "shadow", r, hmax);
        throw ToleranceError(kModule, buf);
      }
    }
  }
  return t;
}

Table classify_map(const RunConfig& cfg) {
  const MediumConfig med(cfg.n, cfg.theta_i, cfg.k);
  const auto spec = raw_grid(cfg);
  Table t = start_table(cfg, {"x", "y", "region", "type", "v", "jacobian"});
  for (int j = 0; j < spec.ny; ++j) {
    const double y = spec.y(j);
    const double v = eikonal::v_field(med, y);
    const double J = y == 0.0 ? std::nan("") : eikonal::gradient_closed_form(med, 0.0, y).J;
    for (int i = 0; i < spec.nx; ++i) {
      const double x = spec.x(i);
      t.add_row({axis(cfg.grid.x0, cfg.grid.x1, cfg.grid.nx, i), axis(cfg.grid.y0, cfg.grid.y1, cfg.grid.ny, j),
                 std::string(eikonal::to_string(eikonal::region_of(y))),
                 std::string(eikonal::to_string(eikonal::classify_point(med, x, y))), v, J});
    }
  }
  return t;
}

Table airy_sectors(const RunConfig& cfg) {
  constexpr double modulus = 8.0;
  const airy::AsymptoticOrder order(6);
  const double tol = cfg.tolerance("airy_rel");
  Table t = start_table(cfg, {"phase", "sector", "terms", "z_re", "z_im", "ai_exact_re", "ai_exact_im",
                              "ai_asymptotic_re", "ai_asymptotic_im", "rel_err", "first_omitted", "ok"});
  t.meta["modulus"] = modulus;
  t.meta["order"] = order.n_terms();
  int failures = 0;
  for (int i = 0; i < 360; ++i) {
    // half-step offset keeps the samples off the Stokes rays
    const double ph = (i + 0.5) * kTwoPi / 360.0;
    const Complex z = std::polar(modulus, ph);
    const auto sec = airy::sector_of(ph);
    const std::int64_t sector = ph < airy::kStokesRay1 ? 1 : ph < airy::kStokesRay2 ? 2 : 3;
    const Complex exact = airy::ai_exact(z), asym = airy::ai_asymptotic(z, order);
    const double rel = std::abs(asym - exact) / std::abs(exact);
    const bool good = rel <= tol;
    failures += !good;
    t.add_row({ph, sector, static_cast<std::int64_t>(sec.terms.size()), z.real(), z.imag(), exact.real(),
               exact.imag(), asym.real(), asym.imag(), rel, airy::first_omitted_term(z, order),
               static_cast<std::int64_t>(good)});
  }
  t.meta["failures"] = failures;
  return t;
}

// On the Stokes ray ph z = 2 pi / 3 the Borel sum of the w- series has two
// lateral values; their difference is the switched-on w+ contribution.
Table stokes_demo(const RunConfig& cfg) {
  const double ph = airy::kStokesRay1;
  const Complex pref = 0.5 / std::sqrt(kPi);
  const auto& c = airy::asymptotic_coefficients();
  Table t = start_table(cfg, {"modulus", "n_trunc", "ai_re", "ai_im", "above_rel_err", "below_rel_err",
                              "median_rel_err", "jump_re", "jump_im", "switched_re", "switched_im", "jump_rel_err"});
  t.meta["phase"] = ph;
  for (int step = 0; step <= 8; ++step) {
    const double r = 4.0 + step;
    const Complex z = std::polar(r, ph);
    const Complex zeta = airy::zeta_on_branch(r, ph);
    const int n = std::max(borel::kLateTermMin, static_cast<int>(std::floor(2.0 * std::abs(zeta))));
    const auto model = borel::LateTermModel::for_airy(z, 3);
    Complex partial = 0.0;
    for (int m = 0; m < n; ++m) partial += (m % 2 ? -1.0 : 1.0) * c[m] / std::pow(zeta, m);
    const Complex above = borel::resum_tail_lateral(model, n, +1);
    const Complex below = borel::resum_tail_lateral(model, n, -1);
    const Complex wm = airy::wkb_approximant_on_branch(r, ph, airy::Sign::minus);
    const Complex wp = airy::wkb_approximant_on_branch(r, ph, airy::Sign::plus);
    const Complex ai = airy::ai_exact(z);
    auto err = [&](Complex tail) { return std::abs(pref * wm * (partial + tail) - ai) / std::abs(ai); };
    const Complex jump = pref * wm * (above - below);
    const Complex switched = Complex(0.0, 1.0) * pref * wp *
                             airy::corrective_series_on_branch(r, ph, airy::Sign::plus, airy::AsymptoticOrder(n / 2 + 1));
    t.add_row({r, static_cast<std::int64_t>(n), ai.real(), ai.imag(), err(above), err(below),
               err(0.5 * (above + below)), jump.real(), jump.imag(), switched.real(), switched.imag(),
               std::abs(jump - switched) / std::abs(switched)});
  }
  return t;
}

Table goos_scan(const RunConfig& cfg) {
  const double tc = std::asin(1.0 / cfg.n);
  const double L = cfg.length_scale();
  Table t = start_table(cfg, {"theta_i", "delta", "d_delta_d_theta", "x_bar", "d"});
  t.meta["theta_crit"] = tc;
  t.meta["wavelength"] = kTwoPi / cfg.k;
  constexpr int count = 50;
  const double lo = tc + 0.01, hi = kPi / 2 - 0.01;
  for (int i = 0; i < count; ++i) {
    const double th = lo + (hi - lo) * i / (count - 1);
    const MediumConfig med(cfg.n, th, cfg.k);
    const auto s = goos::shift(med);
    t.add_row({th, field::reflection_phase(med).delta, s.d_delta_d_theta, s.X_bar / L, s.D / L});
  }
  return t;
}

Table verify_all(const RunConfig& cfg) {
  Table t = start_table(cfg, {"id", "name", "passed", "detail"});
  int failed = 0;
  for (const auto& r : verify::run_acceptance()) {
    failed += !r.passed;
    t.add_row({static_cast<std::int64_t>(r.id), r.name, static_cast<std::int64_t>(r.passed), r.detail});
  }
  t.meta["criteria"] = verify::kCriterionCount;
  t.meta["failed"] = failed;
  return t;
}

void write(const RunConfig& cfg, const Table& t) {
  auto emit = [&](std::ostream& os) {
    if (cfg.format == Format::csv) {
      write_csv(os, t);
    } else {
      write_json(os, t);
    }
    os.flush();
    if (!os) throw IoError(kModule, "write failed");
  };
  if (cfg.out.empty()) {
    emit(std::cout);
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError(kModule, "cannot open '" + cfg.out + "' for writing");
  emit(f);
}

int report(std::ostream& err, const std::exception& e, int code) {
  err << "tirlab: " << e.what() << '\n';
  return code;
}

int code_for(const Error& e) {
  switch (e.error_class()) {
    case ErrorClass::config:
      return config_error;
    case ErrorClass::domain:
      return domain_error;
    case ErrorClass::tolerance:
      return tolerance_error;
    case ErrorClass::io:
      return io_error;
  }
  return 1;
}

}  // namespace

Table run_scenario(const RunConfig& cfg) {
  validate(cfg);
  switch (cfg.scenario) {
    case Scenario::field_map:
      return field_map(cfg);
    case Scenario::airy_sectors:
      return airy_sectors(cfg);
    case Scenario::stokes_demo:
      return stokes_demo(cfg);
    case Scenario::goos_scan:
      return goos_scan(cfg);
    case Scenario::classify_map:
      return classify_map(cfg);
    case Scenario::verify:
      return verify_all(cfg);
  }
  throw ConfigError(kModule, "unhandled scenario");
}

int run(const RunConfig& cfg, std::ostream& err) {
  try {
    const Table t = run_scenario(cfg);
    write(cfg, t);
    if (cfg.scenario == Scenario::verify && t.meta.at("failed").get<int>() > 0) {
      err << "tirlab: " << t.meta.at("failed").get<int>() << " acceptance criteria failed\n";
      return tolerance_error;
    }
    return ok;
  } catch (const Error& e) {
    return report(err, e, code_for(e));
  } catch (const std::exception& e) {
    return report(err, e, 1);
  }
}

int main_entry(int argc, const char* const* argv) {
  try {
    const auto cfg = parse_command_line(argc, argv);
    if (!cfg) return ok;
    return run(*cfg, std::cerr);
  } catch (const Error& e) {
    return report(std::cerr, e, code_for(e));
  } catch (const std::exception& e) {
    return report(std::cerr, e, 1);
  }
}

}  // namespace tir::cli
