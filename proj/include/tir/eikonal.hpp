#pragma once

// Ludwig eikonal system for a linear wavefront hitting the flat interface
// y = 0 from the denser side (y > 0, index n) into the rarer side (y < 0,
// index 1):
//
//   |grad u|^2 + v |grad v|^2 = n^2,   grad u . grad v = 0
//
// Fractional powers of v are only ever taken on the real branch; the complex
// shadow phase is assembled explicitly.

#include <optional>
#include <utility>

#include "tir/common.hpp"

namespace tir::eikonal {

class MediumConfig {
 public:
  /// Throws ConfigError unless n > 1, 0 < theta_i <= pi/2 and k > 0.
  MediumConfig(double n, double theta_i, double k);

  double n() const noexcept { return n_; }
  double theta_i() const noexcept { return theta_; }
  double k() const noexcept { return k_; }
  double theta_crit() const noexcept { return theta_crit_; }

  /// sqrt(n^2 sin^2 theta_i - 1), with the difference formed as
  /// (n sin - 1)(n sin + 1); 0 at or below the critical angle.
  double kappa() const noexcept;
  bool supercritical() const noexcept;
  bool critical() const noexcept;   // |n sin theta_i - 1| <= 1e-14
  bool grazing() const noexcept;    // theta_i == pi/2 up to 1e-14

 private:
  double n_, theta_, k_, theta_crit_;
};

enum class Region { illuminated, boundary, shadow };
enum class RegionType { hyperbolic, parabolic, elliptic };

const char* to_string(Region r);
const char* to_string(RegionType r);

Region region_of(double y);

struct PhasePair {
  double u = 0.0;
  double v = 0.0;
  Region region = Region::boundary;
  Complex phi_plus;
  Complex phi_minus;
};

struct GradientSample {
  double u_x = 0.0, u_y = 0.0, v_x = 0.0, v_y = 0.0;
  double J = 0.0;  // u_y v_x - u_x v_y
};

GradientSample make_sample(double u_x, double u_y, double v_x, double v_y);

double u_field(const MediumConfig& cfg, double x, Region region);

/// Throws Fault::subcritical for y < 0 below the critical angle.
double v_field(const MediumConfig& cfg, double y);

/// (Phi+, Phi-).
std::pair<Complex, Complex> phase(const MediumConfig& cfg, double x, double y);
PhasePair phase_pair(const MediumConfig& cfg, double x, double y);

/// Throws Fault::degenerate_jacobian for J == 0.
RegionType classify(double v, double J);

/// Region type at a point of the closed-form solution. On y = 0 the
/// y-derivative of v is unbounded, so the point is classified by sign(v) alone.
RegionType classify_point(const MediumConfig& cfg, double x, double y);

/// Analytic gradients; Fault::singularity at y = 0.
GradientSample gradient_closed_form(const MediumConfig& cfg, double x, double y);
/// v_yy of the closed form (u is harmonic, v depends on y only).
double laplacian_v(const MediumConfig& cfg, double y);

/// Central differences, h = 1e-6 max(1, |y|); the stencil may not cross y = 0.
GradientSample gradient_numerical(const MediumConfig& cfg, double x, double y);

/// dx/dy of the two characteristics (+ and - root).
std::pair<double, double> characteristic_slopes(const GradientSample& g, double v);

struct BeltramiReport {
  double rho = 0.0;
  double residual_a = 0.0;   // u_x - rho v_y
  double residual_b = 0.0;   // u_y + rho v_x
  double Q = 0.0;
  double bracket = 0.0;      // 1/rho + rho
  bool bracket_ok = false;   // 1/Q <= bracket <= Q
  double jacobian = 0.0;     // u_x v_y - u_y v_x (orientation of the Beltrami map)
  double gradient_energy = 0.0;  // u_x^2 + u_y^2 + v_x^2 + v_y^2
  bool inequality_ok = false;    // gradient_energy <= (1/Q + Q) jacobian
};

/// Shadow-region diagnostics. Q defaults to 1/rho + rho, the smallest
/// admissible constant at the point.
BeltramiReport beltrami_check(const GradientSample& g, double v, std::optional<double> Q = {});

double backlund_residual(const GradientSample& g, double v);

/// (|grad u|^2 + v |grad v|^2 - n^2, grad u . grad v)
std::pair<double, double> eikonal_residual(const GradientSample& g, double v, double n_local);

}  // namespace tir::eikonal
