#include "tir/goos.hpp"

#include <cmath>

#include "tir/field.hpp"

namespace tir::goos {
namespace {
constexpr std::string_view kModule = "goos";
}

double delta_derivative(const MediumConfig& cfg) {
  if (cfg.critical()) {
    throw DomainError(kModule, Fault::divergence, "d delta / d theta diverges at the critical angle");
  }
  if (!cfg.supercritical()) throw DomainError(kModule, Fault::subcritical, "theta_i is below the critical angle");
  const double s = std::sin(cfg.theta_i());
  const double e = (s - 1.0 / cfg.n()) * (s + 1.0 / cfg.n());
  return -2.0 * s / std::sqrt(e);
}

ShiftResult shift(const MediumConfig& cfg) {
  if (cfg.grazing()) throw DomainError(kModule, Fault::grazing, "lateral shift is unbounded at grazing incidence");
  ShiftResult r;
  r.d_delta_d_theta = delta_derivative(cfg);
  const double kn = cfg.k() * cfg.n();
  const double c = std::cos(cfg.theta_i());
  r.X_bar = r.d_delta_d_theta / (kn * c);
  r.D = r.X_bar * c;
  r.delta0 = field::reflection_phase(cfg).delta - r.X_bar * kn * std::sin(cfg.theta_i());
  r.wavelength = kTwoPi / cfg.k();
  return r;
}

Complex shifted_reflected(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0, double x,
                          double y) {
  if (!(y > 0.0)) throw DomainError(kModule, Fault::out_of_region, "shifted field needs y > 0");
  const ShiftResult r = shift(cfg);
  const double s = std::sin(cfg.theta_i()), c = std::cos(cfg.theta_i());
  const double kn = cfg.k() * cfg.n();
  const double xs = x + r.X_bar;
  return psi0 / std::sqrt(cfg.k()) * std::polar(1.0, r.delta0) * f1(xs - y * s / c) *
         std::polar(1.0, kn * (xs * s + y * c));
}

Complex shifted_field(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0, double x, double y) {
  return field::illuminated_terms(cfg, f1, psi0, x, y).incident + shifted_reflected(cfg, f1, psi0, x, y);
}

}  // namespace tir::goos
