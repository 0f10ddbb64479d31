#include "tir/eikonal.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace tir::eikonal {
namespace {

constexpr std::string_view kModule = "eikonal";
constexpr double kAngleTol = 1e-14;

}  // namespace

MediumConfig::MediumConfig(double n, double theta_i, double k) : n_(n), theta_(theta_i), k_(k) {
  if (!(n > 1.0) || !std::isfinite(n)) throw ConfigError(kModule, "refractive index n must be > 1");
  if (!(theta_i > 0.0 && theta_i <= kPi / 2)) {
    throw ConfigError(kModule, "incidence angle must lie in (0, pi/2]");
  }
  if (!(k > 0.0) || !std::isfinite(k)) throw ConfigError(kModule, "wavenumber k must be > 0");
  theta_crit_ = std::asin(1.0 / n);
}

double MediumConfig::kappa() const noexcept {
  const double ns = n_ * std::sin(theta_);
  const double d = (ns - 1.0) * (ns + 1.0);
  return d > 0.0 ? std::sqrt(d) : 0.0;
}

bool MediumConfig::critical() const noexcept {
  return std::abs(n_ * std::sin(theta_) - 1.0) <= kAngleTol;
}

bool MediumConfig::supercritical() const noexcept {
  return !critical() && n_ * std::sin(theta_) > 1.0;
}

bool MediumConfig::grazing() const noexcept { return std::abs(theta_ - kPi / 2) <= kAngleTol; }

const char* to_string(Region r) {
  switch (r) {
    case Region::illuminated: return "illuminated";
    case Region::boundary: return "boundary";
    case Region::shadow: return "shadow";
  }
  return "?";
}

const char* to_string(RegionType r) {
  switch (r) {
    case RegionType::hyperbolic: return "hyperbolic";
    case RegionType::parabolic: return "parabolic";
    case RegionType::elliptic: return "elliptic";
  }
  return "?";
}

Region region_of(double y) {
  if (y > 0.0) return Region::illuminated;
  if (y < 0.0) return Region::shadow;
  return Region::boundary;
}

GradientSample make_sample(double u_x, double u_y, double v_x, double v_y) {
  return GradientSample{u_x, u_y, v_x, v_y, u_y * v_x - u_x * v_y};
}

double u_field(const MediumConfig& cfg, double x, Region) {
  return cfg.n() * std::sin(cfg.theta_i()) * x;
}

double v_field(const MediumConfig& cfg, double y) {
  if (y > 0.0) return std::cbrt(std::pow(1.5 * cfg.n() * std::cos(cfg.theta_i()) * y, 2.0));
  if (y == 0.0) return 0.0;
  if (!cfg.supercritical() && !cfg.critical()) {
    throw DomainError(kModule, Fault::subcritical,
                      "shadow-side phase needs theta_i > theta_crit (no total reflection)");
  }
  return -std::cbrt(std::pow(1.5 * cfg.kappa() * (-y), 2.0));
}

std::pair<Complex, Complex> phase(const MediumConfig& cfg, double x, double y) {
  const double u = u_field(cfg, x, region_of(y));
  const double v = v_field(cfg, y);
  if (v > 0.0) {
    const double w = 2.0 / 3.0 * v * std::sqrt(v);
    return {Complex(u + w, 0.0), Complex(u - w, 0.0)};
  }
  if (v < 0.0) {
    const double w = 2.0 / 3.0 * (-v) * std::sqrt(-v);
    return {Complex(u, -w), Complex(u, w)};
  }
  return {Complex(u, 0.0), Complex(u, 0.0)};
}

PhasePair phase_pair(const MediumConfig& cfg, double x, double y) {
  PhasePair p;
  p.region = region_of(y);
  p.u = u_field(cfg, x, p.region);
  p.v = v_field(cfg, y);
  std::tie(p.phi_plus, p.phi_minus) = phase(cfg, x, y);
  return p;
}

RegionType classify(double v, double J) {
  if (J == 0.0) throw DomainError(kModule, Fault::degenerate_jacobian, "classification needs J != 0");
  if (v > 0.0) return RegionType::hyperbolic;
  if (v < 0.0) return RegionType::elliptic;
  return RegionType::parabolic;
}

RegionType classify_point(const MediumConfig& cfg, double x, double y) {
  const double v = v_field(cfg, y);
  if (y == 0.0) return RegionType::parabolic;
  return classify(v, gradient_closed_form(cfg, x, y).J);
}

GradientSample gradient_closed_form(const MediumConfig& cfg, double, double y) {
  if (y == 0.0) throw DomainError(kModule, Fault::singularity, "v_y is unbounded on y = 0");
  const double u_x = cfg.n() * std::sin(cfg.theta_i());
  double v_y;
  if (y > 0.0) {
    const double a = 1.5 * cfg.n() * std::cos(cfg.theta_i());
    v_y = 2.0 / 3.0 * a / std::cbrt(a * y);
  } else {
    v_field(cfg, y);  // region check
    const double b = 1.5 * cfg.kappa();
    v_y = 2.0 / 3.0 * b / std::cbrt(b * (-y));
  }
  return make_sample(u_x, 0.0, 0.0, v_y);
}

double laplacian_v(const MediumConfig& cfg, double y) {
  if (y == 0.0) throw DomainError(kModule, Fault::singularity, "v_yy is unbounded on y = 0");
  if (y > 0.0) {
    const double a = 1.5 * cfg.n() * std::cos(cfg.theta_i());
    return -2.0 / 9.0 * a * a / std::pow(a * y, 4.0 / 3.0);
  }
  v_field(cfg, y);
  const double b = 1.5 * cfg.kappa();
  return 2.0 / 9.0 * b * b / std::pow(b * (-y), 4.0 / 3.0);
}

GradientSample gradient_numerical(const MediumConfig& cfg, double x, double y) {
  const double h = 1e-6 * std::max(1.0, std::abs(y));
  if (std::abs(y) <= h) {
    throw DomainError(kModule, Fault::region_straddling, "difference stencil would cross y = 0");
  }
  auto U = [&](double xx, double yy) { return u_field(cfg, xx, region_of(yy)); };
  auto V = [&](double, double yy) { return v_field(cfg, yy); };
  const double u_x = (U(x + h, y) - U(x - h, y)) / (2 * h);
  const double u_y = (U(x, y + h) - U(x, y - h)) / (2 * h);
  const double v_x = (V(x + h, y) - V(x - h, y)) / (2 * h);
  const double v_y = (V(x, y + h) - V(x, y - h)) / (2 * h);
  return make_sample(u_x, u_y, v_x, v_y);
}

std::pair<double, double> characteristic_slopes(const GradientSample& g, double v) {
  if (v < 0.0) throw DomainError(kModule, Fault::elliptic_input, "no real characteristics for v < 0");
  const double s = std::sqrt(v);
  const double num_p = g.u_x + s * g.v_x, den_p = g.u_y + s * g.v_y;
  const double num_m = g.u_x - s * g.v_x, den_m = g.u_y - s * g.v_y;
  const double scale = std::abs(g.u_x) + std::abs(g.u_y) + s * (std::abs(g.v_x) + std::abs(g.v_y));
  if (std::abs(den_p) <= 1e-14 * scale || std::abs(den_m) <= 1e-14 * scale) {
    throw DomainError(kModule, Fault::vertical_characteristic, "characteristic with dy = 0");
  }
  return {num_p / den_p, num_m / den_m};
}

BeltramiReport beltrami_check(const GradientSample& g, double v, std::optional<double> Q) {
  if (v >= 0.0) throw DomainError(kModule, Fault::out_of_region, "Beltrami form holds for v < 0 only");
  const double grad_v = std::hypot(g.v_x, g.v_y);
  if (grad_v == 0.0) throw DomainError(kModule, Fault::degenerate_jacobian, "|grad v| = 0");
  BeltramiReport r;
  r.rho = std::hypot(g.u_x, g.u_y) / grad_v;
  r.residual_a = g.u_x - r.rho * g.v_y;
  r.residual_b = g.u_y + r.rho * g.v_x;
  r.bracket = 1.0 / r.rho + r.rho;
  r.Q = Q.value_or(r.bracket);
  r.bracket_ok = 1.0 / r.Q <= r.bracket && r.bracket <= r.Q * (1 + 1e-14);
  r.jacobian = g.u_x * g.v_y - g.u_y * g.v_x;
  r.gradient_energy = g.u_x * g.u_x + g.u_y * g.u_y + g.v_x * g.v_x + g.v_y * g.v_y;
  r.inequality_ok = r.gradient_energy <= (1.0 / r.Q + r.Q) * r.jacobian * (1 + 1e-14);
  return r;
}

double backlund_residual(const GradientSample& g, double v) {
  if (v >= 0.0) throw DomainError(kModule, Fault::out_of_region, "Backlund map holds for v < 0 only");
  const double gv2 = g.v_x * g.v_x + g.v_y * g.v_y;
  if (gv2 == 0.0) throw DomainError(kModule, Fault::degenerate_jacobian, "|grad v| = 0");
  const double f = std::sqrt(1.0 - v * gv2) / std::sqrt(gv2);
  const double rx = -g.v_y * f, ry = g.v_x * f;
  // grad u = -+ f (-v_y, v_x); keep the better sign
  const double minus = std::hypot(g.u_x + rx, g.u_y + ry);
  const double plus = std::hypot(g.u_x - rx, g.u_y - ry);
  return std::min(minus, plus);
}

std::pair<double, double> eikonal_residual(const GradientSample& g, double v, double n_local) {
  const double gu2 = g.u_x * g.u_x + g.u_y * g.u_y;
  const double gv2 = g.v_x * g.v_x + g.v_y * g.v_y;
  return {gu2 + v * gv2 - n_local * n_local, g.u_x * g.v_x + g.u_y * g.v_y};
}

}  // namespace tir::eikonal
