#pragma once

// Goos-Hanchen lateral shift from the carrier-point linearization of the
// reflection phase in the tangential wavenumber k_x = k n sin(theta_i).

#include "tir/eikonal.hpp"
#include "tir/profile.hpp"

namespace tir::goos {

using eikonal::MediumConfig;

struct ShiftResult {
  double d_delta_d_theta = 0.0;
  double X_bar = 0.0;       // d delta / d k_x at the carrier, <= 0
  double D = 0.0;           // X_bar cos(theta_i)
  double delta0 = 0.0;      // delta - X_bar k n sin(theta_i)
  double wavelength = 0.0;  // 2 pi / k
};

/// -2 sin(theta) / sqrt(sin^2 theta - sin^2 theta_crit).
/// Fault::subcritical below, Fault::divergence at the critical angle.
double delta_derivative(const MediumConfig& cfg);

/// Fault::grazing at theta_i = pi/2 where X_bar is unbounded.
ShiftResult shift(const MediumConfig& cfg);

/// Illuminated field with the reflected wave linearized about the carrier:
/// envelope and carrier both displaced to x + X_bar, phase e^{i delta0}.
Complex shifted_field(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0, double x, double y);
/// Only the reflected part of shifted_field.
Complex shifted_reflected(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0, double x, double y);

}  // namespace tir::goos
