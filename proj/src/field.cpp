#include "tir/field.hpp"

#include <algorithm>
#include <cmath>

#include "tir/kernels.hpp"

namespace tir::field {
namespace {

constexpr std::string_view kModule = "field";
const Complex kI(0.0, 1.0);

// sin^2 theta - sin^2 theta_crit without cancellation near the critical angle.
double sin2_excess(const MediumConfig& cfg) {
  const double s = std::sin(cfg.theta_i());
  return (s - 1.0 / cfg.n()) * (s + 1.0 / cfg.n());
}

void require_not_subcritical(const MediumConfig& cfg) {
  if (!cfg.critical() && sin2_excess(cfg) < 0.0) {
    throw DomainError(kModule, Fault::subcritical, "theta_i is below the critical angle");
  }
}

}  // namespace

ReflectionPhase reflection_phase(const MediumConfig& cfg) {
  require_not_subcritical(cfg);
  const double e = cfg.critical() ? 0.0 : sin2_excess(cfg);
  ReflectionPhase r;
  r.delta = -2.0 * std::atan2(std::sqrt(e), std::cos(cfg.theta_i()));
  r.delta_ratio_form = r.delta;
  if (!cfg.critical() && !cfg.grazing()) {
    const auto c = transport::coefficients(cfg);
    r.delta_ratio_form = -2.0 * std::atan(std::sqrt(-(c.alpha_I * c.beta_I) / (*c.alpha_S * *c.beta_S)));
  }
  if (std::abs(r.delta - r.delta_ratio_form) > 1e-12) {
    throw ToleranceError(kModule, "reflection phase closed forms disagree by " +
                                      std::to_string(std::abs(r.delta - r.delta_ratio_form)));
  }
  return r;
}

double fresnel_phase_oracle(const MediumConfig& cfg) {
  require_not_subcritical(cfg);
  const double s = cfg.critical() ? 0.0 : std::sqrt(sin2_excess(cfg));
  const Complex z(std::cos(cfg.theta_i()), -s);
  return std::arg(z / std::conj(z));
}

IlluminatedTerms illuminated_terms(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0,
                                   double x, double y) {
  if (!(y > 0.0)) throw DomainError(kModule, Fault::out_of_region, "illuminated field needs y > 0");
  const Complex amp = psi0 / std::sqrt(cfg.k());
  const double kn = cfg.k() * cfg.n();
  const double s = std::sin(cfg.theta_i()), c = std::cos(cfg.theta_i());
  if (c < kGrazingCollar) {
    // incident and reflected rays coincide: one wave along the interface
    const Complex merged = std::sqrt(2.0) * std::polar(1.0, -kPi / 4);
    return {amp * merged * f1(x) * std::polar(1.0, kn * x), 0.0};
  }
  const double t = s / c;
  const Complex shift = cfg.supercritical() || cfg.critical()
                            ? std::polar(1.0, reflection_phase(cfg).delta)
                            : std::polar(1.0, -kPi / 2);
  return {amp * f1(x + y * t) * std::polar(1.0, kn * (x * s - y * c)),
          amp * shift * f1(x - y * t) * std::polar(1.0, kn * (x * s + y * c))};
}

Complex illuminated_field(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0, double x,
                          double y) {
  return illuminated_terms(cfg, f1, psi0, x, y).total();
}

Complex illuminated_field_product_form(const MediumConfig& cfg, const WavefrontProfile& f1,
                                       const WavefrontProfile& f2, Complex psi0, double x, double y) {
  if (!(y > 0.0)) throw DomainError(kModule, Fault::out_of_region, "illuminated field needs y > 0");
  const auto co = transport::coefficients(cfg);
  const double kn = cfg.k() * cfg.n();
  const double s = std::sin(cfg.theta_i()), c = std::cos(cfg.theta_i()), t = s / c;
  const Complex bracket = std::sqrt(co.beta_I) * f1(x + y * t) + std::sqrt(co.alpha_I) * f2(x - y * t);
  const Complex waves =
      std::polar(1.0, kn * (x * s - y * c)) + std::polar(1.0, -kPi / 2) * std::polar(1.0, kn * (x * s + y * c));
  return psi0 / std::sqrt(cfg.k()) * bracket * waves;
}

Complex shadow_field(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0, double x, double y) {
  if (!(y < 0.0)) throw DomainError(kModule, Fault::out_of_region, "shadow field needs y < 0");
  require_not_subcritical(cfg);
  const auto co = transport::coefficients(cfg);
  const double cs = transport::shadow_shift(co);
  const double delta = reflection_phase(cfg).delta;
  const Complex p = 1.0 + kI * std::tan(delta / 2);
  const Complex bracket = f1(Complex(x, cs * y)) + std::cos(delta) * f1(Complex(x, -cs * y));
  const double kn_s = cfg.k() * cfg.n() * std::sin(cfg.theta_i());
  return psi0 / std::sqrt(cfg.k()) * p * bracket * std::polar(std::exp(cfg.k() * cfg.kappa() * y), kn_s * x);
}

namespace {

std::pair<Complex, Complex> split_at(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0,
                                     Complex C, Complex w1, Complex w2) {
  const double delta = reflection_phase(cfg).delta;
  const Complex p = psi0 * (1.0 + kI * std::tan(delta / 2));
  return {p * f1(w1) + C, p * std::cos(delta) * f1(w2) - C};
}

}  // namespace

std::pair<Complex, Complex> shadow_profiles(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0,
                                            Complex C, double x) {
  require_not_subcritical(cfg);
  transport::coefficients(cfg);
  return split_at(cfg, f1, psi0, C, x, x);
}

Complex shadow_field_split(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0, Complex C,
                           double x, double y) {
  if (!(y < 0.0)) throw DomainError(kModule, Fault::out_of_region, "shadow field needs y < 0");
  require_not_subcritical(cfg);
  const double cs = transport::shadow_shift(transport::coefficients(cfg));
  const auto [a, b] = split_at(cfg, f1, psi0, C, Complex(x, cs * y), Complex(x, -cs * y));
  const double kn_s = cfg.k() * cfg.n() * std::sin(cfg.theta_i());
  return (a + b) / std::sqrt(cfg.k()) * std::polar(std::exp(cfg.k() * cfg.kappa() * y), kn_s * x);
}

FieldGrid synthesize(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0, const GridSpec& spec) {
  if (spec.nx < 2 || spec.ny < 2) throw ConfigError(kModule, "grid needs at least 2 samples per axis");
  if (!(spec.x1 > spec.x0) || !(spec.y1 > spec.y0)) throw ConfigError(kModule, "grid ranges must be increasing");
  FieldGrid g;
  g.spec = spec;
  g.n = cfg.n();
  g.theta_i = cfg.theta_i();
  g.k = cfg.k();
  g.psi0 = psi0;
  g.profile = f1.name();
  g.values.resize(static_cast<std::size_t>(spec.nx) * spec.ny);
  g.regions.resize(g.values.size());
  const double tiny = 1e-12 * std::max(std::abs(spec.y0), std::abs(spec.y1));
  for (int j = 0; j < spec.ny; ++j) {
    const double y = spec.y(j);
    if (std::abs(y) <= tiny) {
      throw DomainError(kModule, Fault::invalid_argument,
                        "grid row lies on the interface y = 0 (matching locus is not sampled)");
    }
    const Region r = eikonal::region_of(y);
    for (int i = 0; i < spec.nx; ++i) {
      const double x = spec.x(i);
      const std::size_t idx = static_cast<std::size_t>(j) * spec.nx + i;
      g.values[idx] = r == Region::illuminated ? illuminated_field(cfg, f1, psi0, x, y)
                                               : shadow_field(cfg, f1, psi0, x, y);
      g.regions[idx] = r;
    }
  }
  return g;
}

BoundaryReport boundary_match(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0,
                              const std::vector<double>& xs, double epsilon, Complex C) {
  if (!cfg.supercritical()) {
    throw DomainError(kModule, Fault::subcritical, "boundary matching needs theta_i > theta_crit");
  }
  if (!(epsilon > 0.0)) throw DomainError(kModule, Fault::invalid_argument, "epsilon must be > 0");
  const auto co = transport::coefficients(cfg);
  const double delta = reflection_phase(cfg).delta;
  const double s = std::sqrt(sin2_excess(cfg));
  const Complex z(std::cos(cfg.theta_i()), -s);
  const Complex fresnel = z / std::conj(z);
  const double weight = std::sqrt(co.beta_I / co.alpha_I);

  BoundaryReport rep;
  rep.epsilon = epsilon;
  rep.x = xs;
  double scale = 0.0;
  for (double x : xs) {
    auto I = [&](double y) { return illuminated_field(cfg, f1, psi0, x, y); };
    auto S = [&](double y) { return shadow_field(cfg, f1, psi0, x, y); };
    const double e = epsilon;
    const Complex iv = I(e), sv = S(-e);
    rep.value_mismatch.push_back(iv - sv);
    // second-order one-sided derivatives at 0+ and 0-
    const Complex d_up = (-2.5 * iv + 4.0 * I(2 * e) - 1.5 * I(3 * e)) / e;
    const Complex d_dn = -(-2.5 * sv + 4.0 * S(-2 * e) - 1.5 * S(-3 * e)) / e;
    rep.derivative_mismatch.push_back(d_up - d_dn);
    scale = std::max({scale, std::abs(iv), std::abs(sv)});
    rep.max_value_mismatch = std::max(rep.max_value_mismatch, std::abs(iv - sv));

    const Complex f = f1(x);
    const Complex f2_bracket = kI * weight * fresnel * f;
    const Complex f2_delta = kI * weight * std::polar(1.0, delta) * f;
    rep.max_identity_residual = std::max(rep.max_identity_residual, std::abs(f2_bracket - f2_delta));
    const auto [a, b] = shadow_profiles(cfg, f1, psi0, C, x);
    rep.max_split_residual = std::max(rep.max_split_residual, std::abs(b - std::cos(delta) * a));
  }
  for (const Complex& d : rep.derivative_mismatch) {
    rep.max_derivative_mismatch = std::max(rep.max_derivative_mismatch, std::abs(d));
  }
  if (scale > 0.0) rep.max_derivative_mismatch /= cfg.k() * scale;
  return rep;
}

double helmholtz_residual(const FieldGrid& grid) {
  const auto& sp = grid.spec;
  const int r = kernels::kStencilRadius;
  if (sp.nx < 2 * r + 1 || sp.ny < 2 * r + 1) {
    throw DomainError(kModule, Fault::invalid_argument, "grid too small for the residual stencil");
  }
  const Region reg = grid.regions.front();
  if (std::any_of(grid.regions.begin(), grid.regions.end(), [&](Region q) { return q != reg; })) {
    throw DomainError(kModule, Fault::region_straddling, "Helmholtz residual needs a single-region grid");
  }
  const double lambda = kTwoPi / grid.k;
  if (sp.dx() > lambda / 10 || sp.dy() > lambda / 10) {
    throw DomainError(kModule, Fault::resolution, "grid spacing exceeds lambda/10");
  }
  const double n_local = reg == Region::illuminated ? grid.n : 1.0;
  const std::size_t count = grid.values.size();
  std::vector<double> re(count), im(count), out_re(count, 0.0), out_im(count, 0.0);
  double peak = 0.0;
  for (std::size_t q = 0; q < count; ++q) {
    re[q] = grid.values[q].real();
    im[q] = grid.values[q].imag();
    peak = std::max(peak, std::abs(grid.values[q]));
  }
  const double k2 = grid.k * grid.k;
  kernels::helmholtz_stencil({re.data(), im.data(), sp.nx, sp.ny, 1.0 / (sp.dx() * sp.dx()),
                              1.0 / (sp.dy() * sp.dy()), k2 * n_local * n_local, out_re.data(),
                              out_im.data()});
  const double eps0 = 1e-12 * k2 * peak;
  double worst = 0.0;
  for (int j = r; j < sp.ny - r; ++j) {
    for (int i = r; i < sp.nx - r; ++i) {
      const std::size_t q = static_cast<std::size_t>(j) * sp.nx + i;
      const double res = std::hypot(out_re[q], out_im[q]) / (k2 * std::abs(grid.values[q]) + eps0);
      worst = std::max(worst, res);
    }
  }
  return worst;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) throw DomainError(kModule, Fault::invalid_argument, "slope fit needs two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

HelmholtzScaling helmholtz_scaling(double n, double theta_i, const WavefrontProfile& f1,
                                   const std::vector<double>& ks, double xc, double yc, double window,
                                   double points_per_wavelength) {
  if (!(yc - window / 2 > 0.0)) {
    throw DomainError(kModule, Fault::out_of_region, "residual window must lie in the illuminated region");
  }
  HelmholtzScaling out;
  std::vector<double> kv, rv;
  for (double k : ks) {
    const MediumConfig cfg(n, theta_i, k);
    const double h = kTwoPi / k / points_per_wavelength;
    const int cells = std::max(static_cast<int>(std::ceil(window / h)), 2 * kernels::kStencilRadius + 4);
    GridSpec spec;
    spec.nx = spec.ny = cells + 1;
    spec.x0 = xc - cells * h / 2;
    spec.x1 = xc + cells * h / 2;
    spec.y0 = yc - cells * h / 2;
    spec.y1 = yc + cells * h / 2;
    const FieldGrid g = synthesize(cfg, f1, std::sqrt(k), spec);
    const double res = helmholtz_residual(g);
    out.samples.push_back({k, res});
    kv.push_back(k);
    rv.push_back(res);
  }
  out.slope = loglog_slope(kv, rv);
  return out;
}

}  // namespace tir::field
