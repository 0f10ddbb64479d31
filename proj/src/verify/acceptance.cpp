#include "tir/verify/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "tir/airy.hpp"
#include "tir/borel.hpp"
#include "tir/eikonal.hpp"
#include "tir/field.hpp"
#include "tir/goos.hpp"
#include "tir/transport.hpp"
#include "tir/verify/oracles.hpp"

namespace tir::verify {
namespace {

using eikonal::MediumConfig;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- 1. reflection phase vs Fresnel oracle ---------------------------------
Outcome phase_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (double n : {1.33, 1.5, 2.4}) {
    const double lo = std::asin(1.0 / n) + 1e-6, hi = kPi / 2 - 1e-6;
    for (int i = 0; i < 1000; ++i) {
      const MediumConfig cfg(n, lo + (hi - lo) * (i + 0.5) / 1000.0, 1.0);
      worst = std::max(worst, std::abs(field::reflection_phase(cfg).delta - field::fresnel_phase_oracle(cfg)));
    }
  }
  const double secs = elapsed_since(t0);
  return {worst <= 1e-12 && secs < 1.0, fmt("max |delta - oracle| = %.3e rad", worst)};
}

// ---- 2. endpoint values -------------------------------------------------------
Outcome endpoints() {
  double at_crit = 0.0, near_graze = 0.0;
  for (double n : {1.33, 1.5, 2.4}) {
    at_crit = std::max(at_crit, std::abs(field::reflection_phase(MediumConfig(n, std::asin(1.0 / n), 1.0)).delta));
    near_graze = std::max(near_graze,
                          std::abs(field::reflection_phase(MediumConfig(n, kPi / 2 - 1e-6, 1.0)).delta + kPi));
  }
  return {at_crit == 0.0 && near_graze <= 1e-3,
          fmt("|delta(theta_crit)| = %.3e, |delta(pi/2 - 1e-6) + pi| = %.3e", at_crit, near_graze)};
}

// ---- 3. ai_exact vs contour quadrature ---------------------------------------
Outcome airy_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  Complex worst_z;
  for (int i = 0; i < 25; ++i) {
    const double r = 0.1 * std::pow(250.0, i / 24.0);
    for (int p = 0; p < 8; ++p) {
      const Complex z = std::polar(r, p * kPi / 4);
      const auto q = ai_quadrature(z);
      const double rel = std::abs(airy::ai_exact(z) - q.value) / std::abs(q.value);
      if (rel > worst) {
        worst = rel;
        worst_z = z;
      }
    }
  }
  const double secs = elapsed_since(t0);
  return {worst <= 1e-10 && secs < 30.0,
          fmt("max rel err = %.3e at z = %.4g%+.4gi over 200 points", worst, worst_z.real(), worst_z.imag())};
}

// ---- 4. sector table at |z| = 8 ------------------------------------------------
Outcome stokes_table() {
  const airy::AsymptoticOrder order(6);
  double worst = 0.0, unswitched = 0.0;
  for (int i = 0; i < 360; ++i) {
    const double ph = (i + 0.5) * kTwoPi / 360.0;
    if (std::abs(ph - airy::kStokesRay1) < 1e-2 || std::abs(ph - airy::kStokesRay2) < 1e-2) continue;
    const Complex z = std::polar(8.0, ph);
    const Complex exact = airy::ai_exact(z);
    worst = std::max(worst, std::abs(airy::ai_asymptotic(z, order) - exact) / std::abs(exact));
    if (ph > airy::kStokesRay1 && ph < airy::kStokesRay2) {
      unswitched = std::max(unswitched, std::abs(airy::ai_unswitched(z, order) - exact) / std::abs(exact));
    }
  }
  return {worst <= 1e-6 && unswitched >= 1e-2,
          fmt("switched max rel err = %.3e, unswitched max rel err in (2pi/3, 4pi/3) = %.3e", worst, unswitched)};
}

// ---- 5. monodromy of Lambda_0 --------------------------------------------------
Outcome monodromy() {
  double worst = 0.0;
  for (double zr : {0.5, 1.0, 2.0, 4.0}) {
    const Complex z = zr;
    const Complex base = borel::lambda_n({0, z});
    const Complex cont = borel::lambda_n_continued({0, z}, +1);
    const Complex series = lambda_continued_series(0, z, +1);
    const Complex expected = base - Complex(0.0, kTwoPi) * z * std::exp(z);
    worst = std::max({worst, std::abs(cont - series) / std::abs(base), std::abs(cont - expected) / std::abs(base)});
  }
  return {worst <= 1e-10, fmt("max |continued - reference| / |Lambda_0| = %.3e", worst)};
}

// ---- 6. late terms vs recurrence ----------------------------------------------
Outcome late_terms() {
  const Complex z = 3.0;
  const auto model = borel::LateTermModel::for_airy(z, 3);
  const auto& c = airy::asymptotic_coefficients();
  const Complex zeta = airy::zeta_on_branch(3.0, 0.0);
  std::vector<double> err;
  for (int m = 25; m <= 40; ++m) {
    const Complex w = c[m] / std::pow(zeta, m);
    err.push_back(std::abs(borel::late_term(model, m) / w - 1.0));
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < err.size(); ++i) decreasing = decreasing && err[i] < err[i - 1];
  return {err.front() <= 0.05 && decreasing,
          fmt("rel err m=25: %.3e, m=40: %.3e, monotone: %s", err.front(), err.back(), decreasing ? "yes" : "no")};
}

// ---- 7. eikonal identities -----------------------------------------------------
Outcome eikonal_identities() {
  double ray = 0.0, ortho = 0.0;
  for (double n : {1.5, 2.4}) {
    const double tc = std::asin(1.0 / n);
    for (int a = 0; a < 50; ++a) {
      const double th = tc + 0.01 + (kPi / 2 - 0.02 - tc) * a / 49.0;
      const MediumConfig cfg(n, th, 1.0);
      for (int b = 0; b < 50; ++b) {
        const double mag = 1e-3 * std::pow(1e4, (b % 25) / 24.0);
        const double y = b < 25 ? mag : -mag;
        const auto g = eikonal::gradient_closed_form(cfg, 0.7, y);
        const double v = eikonal::v_field(cfg, y);
        const double n_local = y > 0 ? n : 1.0;
        // grad Phi+- = grad u +- sqrt(v) grad v, with sqrt(v) = i sqrt(-v) in the shadow
        const Complex root = v >= 0 ? Complex(std::sqrt(v), 0.0) : Complex(0.0, std::sqrt(-v));
        for (double sg : {1.0, -1.0}) {
          const Complex px = g.u_x + sg * root * g.v_x, py = g.u_y + sg * root * g.v_y;
          ray = std::max(ray, std::abs(px * px + py * py - n_local * n_local));
        }
        ortho = std::max(ortho, std::abs(eikonal::eikonal_residual(g, v, n_local).second));
      }
    }
  }
  return {ray <= 1e-12 && ortho <= 1e-12, fmt("max ||grad Phi|^2 - n^2| = %.3e, max |grad u . grad v| = %.3e", ray, ortho)};
}

// ---- 8. classification ----------------------------------------------------------
Outcome classification() {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    const double n = 1.05 + 1.95 * U(rng);
    const double tc = std::asin(1.0 / n);
    const double th = tc + 0.01 + (kPi / 2 - 0.02 - tc) * U(rng);
    const MediumConfig cfg(n, th, 1.0);
    const double x = 4.0 * U(rng) - 2.0;
    const double y = 0.01 + 5.0 * U(rng);
    bad += eikonal::classify_point(cfg, x, y) != eikonal::RegionType::hyperbolic;
    bad += eikonal::classify_point(cfg, x, -y) != eikonal::RegionType::elliptic;
    bad += eikonal::classify_point(cfg, x, 0.0) != eikonal::RegionType::parabolic;
  }
  return {bad == 0, fmt("%d misclassified of 300 points", bad)};
}

// ---- 9. transport residual order -----------------------------------------------
Outcome transport_order() {
  const MediumConfig cfg(1.5, kPi / 3, 1.0);
  const auto co = transport::coefficients(cfg);
  const auto f1 = WavefrontProfile::gaussian(0.3, 1.0), f2 = WavefrontProfile::gaussian(-0.2, 0.7);
  transport::AmplitudeField ill = [&](double x, double y) {
    return transport::illuminated_amplitudes(co, f1, f2, cfg.theta_i(), x, y);
  };
  transport::AmplitudeField sh = [&](double x, double y) { return transport::shadow_amplitudes(co, f1, f2, x, y); };
  const std::vector<double> hs{1e-2, 1e-3, 1e-4};
  std::vector<double> ri, rs;
  for (double h : hs) {
    const auto a = transport::transport_residual(ill, cfg, co, eikonal::RegionType::hyperbolic, 0.1, 0.7, h);
    const auto b = transport::transport_residual(sh, cfg, co, eikonal::RegionType::elliptic, 0.1, -0.4, h);
    ri.push_back(std::abs(a.first) + std::abs(a.second));
    rs.push_back(std::abs(b.first) + std::abs(b.second));
  }
  const double si = field::loglog_slope(hs, ri), ss = field::loglog_slope(hs, rs);
  const bool ok = std::abs(si - 2.0) <= 0.2 && std::abs(ss - 2.0) <= 0.2;
  return {ok, fmt("order illuminated = %.3f, shadow = %.3f", si, ss)};
}

// ---- 10. evanescent decay ----------------------------------------------------------
Outcome evanescent_decay() {
  const MediumConfig cfg(1.5, kPi / 3, 100.0);
  const auto one = WavefrontProfile::constant(1.0);
  std::vector<double> ys, ls;
  for (int i = 1; i <= 20; ++i) {
    const double y = -0.002 * i;
    ys.push_back(y);
    ls.push_back(std::log(std::abs(field::shadow_field(cfg, one, std::sqrt(cfg.k()), 0.3, y))));
  }
  double my = 0, ml = 0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    my += ys[i];
    ml += ls[i];
  }
  my /= ys.size();
  ml /= ys.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    sxy += (ys[i] - my) * (ls[i] - ml);
    sxx += (ys[i] - my) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double expect = cfg.k() * std::sqrt(1.5 * 1.5 * 0.75 - 1.0);
  const double rel = std::abs(slope / expect - 1.0);
  return {rel <= 1e-10, fmt("slope = %.12f, expected %.12f, rel err %.3e", slope, expect, rel)};
}

// ---- 11. Helmholtz residual scaling --------------------------------------------------
Outcome helmholtz_scaling() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto f1 = WavefrontProfile::gaussian(0.0, 0.3);
  const auto rep = field::helmholtz_scaling(1.5, kPi / 3, f1, {50, 100, 200, 400, 800}, 0.0, 0.5, 0.2, 20.0);
  const double secs = elapsed_since(t0);
  std::string d = fmt("slope = %.3f (target -1.0 +- 0.1); residuals:", rep.slope);
  for (const auto& s : rep.samples) d += fmt(" k=%g:%.3e", s.k, s.residual);
  return {std::abs(rep.slope + 1.0) <= 0.1 && secs < 120.0, d};
}

// ---- 12. boundary matching -------------------------------------------------------
Outcome boundary_matching() {
  const MediumConfig cfg(1.5, kPi / 3, 100.0);
  const double lambda = kTwoPi / cfg.k();
  const auto f1 = WavefrontProfile::gaussian(0.0, 5.0 * lambda);
  std::vector<double> xs;
  for (int i = 0; i < 100; ++i) xs.push_back(-10.0 * lambda + 20.0 * lambda * i / 99.0);
  const std::vector<double> eps{1e-2, 1e-3, 1e-4};
  std::vector<double> worst;
  std::vector<std::vector<double>> per_x;
  for (double e : eps) {
    const auto rep = field::boundary_match(cfg, f1, std::sqrt(cfg.k()), xs, e * lambda);
    worst.push_back(rep.max_value_mismatch);
    std::vector<double> m;
    for (const auto& v : rep.value_mismatch) m.push_back(std::abs(v));
    per_x.push_back(m);
  }
  const double slope = field::loglog_slope(eps, worst);
  // uniform: every x shrinks by at least the factor 10 per decade, up to 20%
  bool uniform = true;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 1; j < eps.size(); ++j) uniform = uniform && per_x[j][i] <= 0.12 * per_x[j - 1][i] + 1e-300;
  }
  return {std::abs(slope - 1.0) <= 0.1 && uniform,
          fmt("max mismatch %.3e / %.3e / %.3e, slope = %.3f, uniform: %s", worst[0], worst[1], worst[2], slope,
              uniform ? "yes" : "no")};
}

// ---- 13. Goos-Hanchen ---------------------------------------------------------------
double fd_delta_derivative(double n, double th) {
  const double tc = std::asin(1.0 / n);
  const double h = std::min(1e-3, 0.005 * std::min(th - tc, kPi / 2 - th));
  auto delta = [&](double t) { return field::reflection_phase(MediumConfig(n, t, 1.0)).delta; };
  auto central = [&](double s) { return (delta(th + s) - delta(th - s)) / (2 * s); };
  return (4.0 * central(h / 2) - central(h)) / 3.0;
}

Outcome goos_hanchen() {
  const double n = 1.5, tc = std::asin(1.0 / n);
  double worst_fd = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double th = tc + 1e-3 + (kPi / 2 - 2e-3 - tc) * i / 199.0;
    const double a = goos::delta_derivative(MediumConfig(n, th, 1.0));
    worst_fd = std::max(worst_fd, std::abs(a - fd_delta_derivative(n, th)) / std::max(1.0, std::abs(a)));
  }
  const MediumConfig cfg(n, kPi / 3, kTwoPi);  // lambda = 1
  const auto s = goos::shift(cfg);
  const bool exact_d = s.D == s.X_bar * std::cos(cfg.theta_i());
  const double d_over_lambda = std::abs(s.D) / s.wavelength;

  double lo = 1e300, hi = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double off = 0.1 * std::pow(1e-6, i / 49.0);
    const double v = std::abs(goos::shift(MediumConfig(n, tc + off, kTwoPi)).D) * std::sqrt(off);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const bool bounded = lo > 0.0 && hi / lo < 3.0;

  const double sigma = 20.0, h = 1.0 / 20.0;
  const int count = static_cast<int>(6.0 * sigma / h) + 1;
  const auto beam = gaussian_beam_reflection(n, cfg.theta_i(), cfg.k(), sigma, -3.0 * sigma, h, count);
  const int lag = correlation_peak_lag(beam.reflected, beam.incident, 60);
  const double beam_shift = lag * h;
  const bool beam_ok = std::abs(beam_shift - std::abs(s.X_bar)) <= h;

  const bool ok = worst_fd <= 1e-8 && exact_d && d_over_lambda > 0.1 && d_over_lambda < 10.0 && bounded && beam_ok;
  return {ok, fmt("fd err %.2e, D exact %s, |D|/lambda %.4f, |D|sqrt(dtheta) in [%.4f, %.4f], beam shift %.3f vs "
                  "|X_bar| %.4f (cell %.3f)",
                  worst_fd, exact_d ? "yes" : "no", d_over_lambda, lo, hi, beam_shift, std::abs(s.X_bar), h)};
}

// ---- 14. grazing degeneracy ----------------------------------------------------------
Outcome grazing() {
  const MediumConfig cfg(1.5, kPi / 2 - 1e-9, 100.0);
  const auto f1 = WavefrontProfile::gaussian(0.0, 0.5);
  double worst = 0.0;
  for (double x : {-0.3, 0.0, 0.4})
    for (double y : {0.01, 0.2, 1.0}) {
      const auto t = field::illuminated_terms(cfg, f1, std::sqrt(cfg.k()), x, y);
      worst = std::max(worst, std::abs(t.reflected) / std::abs(t.incident));
    }
  return {worst <= 1e-6, fmt("max reflected/incident weight = %.3e", worst)};
}

struct Entry {
  const char* name;
  std::function<Outcome()> check;
};

const std::vector<Entry>& table() {
  static const std::vector<Entry> t{
      {"delta-phase equivalence with Fresnel oracle", phase_equivalence},
      {"reflection phase endpoint values", endpoints},
      {"Airy quadrature oracle equivalence", airy_oracle},
      {"Stokes sector table and unswitched failure", stokes_table},
      {"Borel monodromy of Lambda_0", monodromy},
      {"late terms vs recurrence", late_terms},
      {"eikonal identities", eikonal_identities},
      {"region classification", classification},
      {"transport residual order", transport_order},
      {"evanescent decay rate", evanescent_decay},
      {"Helmholtz residual scaling", helmholtz_scaling},
      {"boundary matching", boundary_matching},
      {"Goos-Hanchen shift", goos_hanchen},
      {"grazing degeneracy", grazing},
  };
  return t;
}

}  // namespace

CriterionResult run_criterion(int id) {
  CriterionResult r;
  r.id = id;
  if (id < 1 || id > kCriterionCount) {
    r.detail = "no such criterion";
    return r;
  }
  const auto& e = table()[id - 1];
  r.name = e.name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Outcome o = e.check();
    r.passed = o.passed;
    r.detail = o.detail;
  } catch (const std::exception& ex) {
    r.passed = false;
    r.detail = std::string("exception: ") + ex.what();
  }
  r.seconds = elapsed_since(t0);
  return r;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace tir::verify
