#pragma once

// Independent reference computations used only for verification.

#include <vector>

#include "tir/common.hpp"

namespace tir::verify {

struct AiryQuadrature {
  Complex value;
  double abs_error = 0.0;
  /// max |integrand| on the chosen contour divided by |Ai(z)|
  double conditioning = 0.0;
};

/// Ai(z) = (1 / 2 pi i) int exp(t^3/3 - z t) dt over a contour from the
/// valley at infinity e^{-i pi/3} to the valley at e^{+i pi/3}.
AiryQuadrature ai_quadrature(Complex z);

/// Lambda_0 continued once counter-clockwise about the origin, from the
/// exponential-integral series with Log z -> Log z + 2 pi i:
///   Lambda_0 = z e^z E1(z),  E1(z) = -gamma - Log z - sum (-z)^k / (k k!)
/// Higher orders follow from Lambda_n = (z/n)(1 - Lambda_{n-1}).
Complex lambda_continued_series(int n, Complex z, int turns);
/// Principal value from the same series (no continuation).
Complex lambda_series(int n, Complex z);

struct BeamAtInterface {
  std::vector<double> x;
  std::vector<Complex> incident;
  std::vector<Complex> reflected;
};

/// Gaussian beam with tangential spectrum exp(-sigma^2 (kx - kx0)^2 / 4),
/// kx0 = k n sin(theta), reflected plane wave by plane wave with the exact
/// phase e^{i delta(kx)}; both sampled on y = 0 at x = x0 + i h.
BeamAtInterface gaussian_beam_reflection(double n, double theta_i, double k, double sigma, double x0,
                                         double h, int count);

/// Lag (in samples) maximizing sum |a(x)| |b(x - lag)| over |lag| <= max_lag.
int correlation_peak_lag(const std::vector<Complex>& a, const std::vector<Complex>& b, int max_lag);

}  // namespace tir::verify
