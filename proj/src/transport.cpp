#include "tir/transport.hpp"

#include <cmath>

namespace tir::transport {
namespace {

constexpr std::string_view kModule = "transport";

}  // namespace

TransportCoefficients coefficients(const MediumConfig& cfg) {
  if (cfg.grazing()) {
    throw DomainError(kModule, Fault::grazing, "transport coefficients are singular at grazing incidence");
  }
  if (cfg.critical()) {
    throw DomainError(kModule, Fault::critical_incidence,
                      "shadow coefficients are singular at the critical angle");
  }
  const double th = cfg.theta_i();
  const double t = std::tan(th);
  const double a = 1.5 * cfg.n() * std::cos(th);
  TransportCoefficients c;
  c.alpha_I = t / std::cbrt(a);
  c.beta_I = t * std::cbrt(a);
  c.lambda_plus = std::sqrt(c.alpha_I * c.beta_I);
  c.lambda_minus = -c.lambda_plus;
  if (cfg.supercritical()) {
    const double ns = cfg.n() * std::sin(th);
    const double d = (ns - 1.0) * (ns + 1.0);  // n^2 sin^2 - 1
    c.alpha_S = std::cbrt(2.0 / 3.0) * ns / std::cbrt(d * d);
    c.beta_S = -std::cbrt(1.5) * ns / std::cbrt(d);
  }
  return c;
}

std::array<double, 2> CharacteristicLine::direction() const {
  const double dx = -sign * slope;
  const double norm = std::hypot(dx, 1.0);
  return {dx / norm, 1.0 / norm};
}

std::pair<CharacteristicLine, CharacteristicLine> characteristic_curves(const TransportCoefficients& coef,
                                                                          double x0) {
  return {CharacteristicLine{+1, x0, coef.lambda_plus}, CharacteristicLine{-1, x0, coef.lambda_plus}};
}

AmplitudePair illuminated_amplitudes(const TransportCoefficients& coef, const WavefrontProfile& f1,
                                     const WavefrontProfile& f2, double theta_i, double x, double y) {
  if (!(y > 0.0)) throw DomainError(kModule, Fault::out_of_region, "illuminated amplitudes need y > 0");
  const double t = std::tan(theta_i);
  const double sa = std::sqrt(coef.alpha_I), sb = std::sqrt(coef.beta_I);
  const double y6 = std::pow(y, 1.0 / 6.0);
  const Complex a = f1(x + y * t);
  const Complex b = f2(x - y * t);
  return {sb * y6 * (sb * a + sa * b), sa / y6 * (-sb * a + sa * b)};
}

DiagonalForm diagonal_form(const TransportCoefficients& coef, const WavefrontProfile& f1,
                           const WavefrontProfile& f2, double theta_i, double x, double y) {
  if (!(y > 0.0)) throw DomainError(kModule, Fault::out_of_region, "diagonal form needs y > 0");
  const double t = std::tan(theta_i);
  const double y6 = std::pow(y, 1.0 / 6.0);
  const double y3 = std::cbrt(y);
  DiagonalForm d;
  d.p1 = f1(x + y * t) / y6;
  d.p2 = f2(x - y * t) * y6;
  d.gamma = {{{coef.beta_I * y3, t}, {-t, coef.alpha_I / y3}}};
  return d;
}

double shadow_shift(const TransportCoefficients& coef) {
  if (!coef.alpha_S || !coef.beta_S) {
    throw DomainError(kModule, Fault::critical_incidence, "no shadow coefficients (theta_i <= theta_crit)");
  }
  return std::sqrt(-*coef.alpha_S * *coef.beta_S);
}

AmplitudePair shadow_amplitudes(const TransportCoefficients& coef, const WavefrontProfile& f1,
                                const WavefrontProfile& f2, double x, double y) {
  if (!(y < 0.0)) throw DomainError(kModule, Fault::out_of_region, "shadow amplitudes need y < 0");
  const double c = shadow_shift(coef);
  const double ratio = std::sqrt(-*coef.alpha_S / *coef.beta_S);
  const double d6 = std::pow(-y, 1.0 / 6.0);
  const Complex a = f1(Complex(x, c * y));
  const Complex b = f2(Complex(x, -c * y));
  // -i (not +i) is the sign that satisfies the shadow transport system
  return {d6 * (a + b), Complex(0.0, -ratio) / d6 * (a - b)};
}

TransportResidual transport_residual(const AmplitudeField& fields, const MediumConfig& cfg,
                                     const TransportCoefficients& coef, RegionType region, double x,
                                     double y, double h, TransportForm form) {
  if (!(h > 0.0)) throw DomainError(kModule, Fault::invalid_argument, "stencil spacing must be > 0");
  const bool inside = (region == RegionType::hyperbolic && y - h > 0.0) ||
                      (region == RegionType::elliptic && y + h < 0.0);
  if (!inside) {
    throw DomainError(kModule, Fault::region_straddling, "stencil is not strictly inside one region");
  }
  const AmplitudePair c = fields(x, y);
  const AmplitudePair e = fields(x + h, y), w = fields(x - h, y);
  const AmplitudePair nn = fields(x, y + h), s = fields(x, y - h);
  const Complex g_x = (e.g0 - w.g0) / (2 * h), g_y = (nn.g0 - s.g0) / (2 * h);
  const Complex h_x = (e.h0 - w.h0) / (2 * h), h_y = (nn.h0 - s.h0) / (2 * h);

  if (form == TransportForm::reduced) {
    double alpha, beta;
    if (region == RegionType::hyperbolic) {
      alpha = coef.alpha_I;
      beta = coef.beta_I;
    } else {
      if (!coef.alpha_S) throw DomainError(kModule, Fault::critical_incidence, "no shadow coefficients");
      alpha = *coef.alpha_S;
      beta = *coef.beta_S;
    }
    const double y3 = std::cbrt(y);
    return {g_y + beta * y3 * h_x - c.g0 / (6 * y), h_y + alpha / y3 * g_x + c.h0 / (6 * y)};
  }

  const eikonal::GradientSample gs = eikonal::gradient_closed_form(cfg, x, y);
  const double v = eikonal::v_field(cfg, y);
  const double lap_u = 0.0;
  const double lap_v = eikonal::laplacian_v(cfg, y);
  const double grad_v2 = gs.v_x * gs.v_x + gs.v_y * gs.v_y;
  const Complex first = 2.0 * (gs.u_x * g_x + gs.u_y * g_y) + lap_u * c.g0 +
                        2.0 * v * (gs.v_x * h_x + gs.v_y * h_y) + v * lap_v * c.h0 + grad_v2 * c.h0;
  const Complex second =
      2.0 * (gs.v_x * g_x + gs.v_y * g_y) + lap_v * c.g0 + 2.0 * (gs.u_x * h_x + gs.u_y * h_y) + lap_u * c.h0;
  return {first, second};
}

}  // namespace tir::transport
