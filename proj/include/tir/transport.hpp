#pragma once

// Leading-order transport amplitudes (g0, h0) for a linear wavefront.
//
// Illuminated side (y > 0), hyperbolic:
//   g0_y + beta_I y^{1/3} h0_x =  g0 / (6y)
//   h0_y + alpha_I y^{-1/3} g0_x = -h0 / (6y)
// Shadow side (y < 0) has the same shape with (alpha_S, beta_S) and is
// elliptic; y^{1/3} is the real cube root there.

#include <array>
#include <functional>
#include <optional>
#include <utility>

#include "tir/eikonal.hpp"
#include "tir/profile.hpp"

namespace tir::transport {

using eikonal::MediumConfig;
using eikonal::RegionType;

struct TransportCoefficients {
  double alpha_I = 0.0;
  double beta_I = 0.0;
  std::optional<double> alpha_S;  // present above the critical angle
  std::optional<double> beta_S;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
};

/// Throws Fault::grazing at theta_i = pi/2 and Fault::critical_incidence at
/// theta_i = theta_crit. Below the critical angle the shadow pair is absent.
TransportCoefficients coefficients(const MediumConfig& cfg);

/// Line x + sign * y * tan(theta_i) = x0, i.e. C+ (sign = +1) or C- (sign = -1).
struct CharacteristicLine {
  int sign = 1;
  double x0 = 0.0;
  double slope = 0.0;  // tan(theta_i)

  double x_at(double y) const { return x0 - sign * slope * y; }
  /// Unit direction (dx, dy) along the line.
  std::array<double, 2> direction() const;
};

std::pair<CharacteristicLine, CharacteristicLine> characteristic_curves(const TransportCoefficients& coef,
                                                                          double x0);

struct AmplitudePair {
  Complex g0;
  Complex h0;
};

/// Fault::out_of_region for y <= 0.
AmplitudePair illuminated_amplitudes(const TransportCoefficients& coef, const WavefrontProfile& f1,
                                     const WavefrontProfile& f2, double theta_i, double x, double y);

/// The uncoupled unknowns p = Gamma^{-1} q and the eigenvector matrix Gamma.
struct DiagonalForm {
  Complex p1, p2;
  std::array<std::array<double, 2>, 2> gamma;

  AmplitudePair reassemble() const {
    return {gamma[0][0] * p1 + gamma[0][1] * p2, gamma[1][0] * p1 + gamma[1][1] * p2};
  }
};

DiagonalForm diagonal_form(const TransportCoefficients& coef, const WavefrontProfile& f1,
                           const WavefrontProfile& f2, double theta_i, double x, double y);

/// sqrt(-alpha_S beta_S): the imaginary shift of the profile arguments.
double shadow_shift(const TransportCoefficients& coef);

/// Fault::out_of_region for y >= 0, Fault::critical_incidence without a
/// shadow pair, Fault::strip_violation from the profiles.
AmplitudePair shadow_amplitudes(const TransportCoefficients& coef, const WavefrontProfile& f1,
                                const WavefrontProfile& f2, double x, double y);

enum class TransportForm { reduced, general };

using AmplitudeField = std::function<AmplitudePair(double x, double y)>;

struct TransportResidual {
  Complex first;
  Complex second;
};

/// Residuals of the two transport equations at (x, y) from 5-point central
/// differences with spacing h. `reduced` uses the linear-wavefront form above,
/// `general` the full system with grad u, grad v, Laplacians from the closed
/// forms. Fault::region_straddling if the stencil touches y = 0 or leaves the
/// region named by `region`.
TransportResidual transport_residual(const AmplitudeField& fields, const MediumConfig& cfg,
                                     const TransportCoefficients& coef, RegionType region, double x,
                                     double y, double h = 1e-4,
                                     TransportForm form = TransportForm::reduced);

}  // namespace tir::transport
