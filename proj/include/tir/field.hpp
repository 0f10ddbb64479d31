#pragma once

// Wavefield synthesis on both sides of the interface y = 0: reflection phase,
// illuminated two-wave field, evanescent shadow field, matching diagnostics
// and the Helmholtz residual study.

#include <string>
#include <vector>

#include "tir/eikonal.hpp"
#include "tir/profile.hpp"
#include "tir/transport.hpp"

namespace tir::field {

using eikonal::MediumConfig;
using eikonal::Region;

struct ReflectionPhase {
  double delta = 0.0;             // -2 atan(sqrt(sin^2 - sin^2_crit) / cos)
  double delta_ratio_form = 0.0;  // -2 atan sqrt(-aI bI / (aS bS))
};

/// Fault::subcritical below the critical angle. ToleranceError if the two
/// closed forms disagree by more than 1e-12.
ReflectionPhase reflection_phase(const MediumConfig& cfg);

/// arg of the TE Fresnel coefficient (c - i s) / (c + i s) by complex division.
double fresnel_phase_oracle(const MediumConfig& cfg);

/// cos below which incidence is treated as grazing by the field synthesis.
inline constexpr double kGrazingCollar = 1e-6;

struct IlluminatedTerms {
  Complex incident;
  Complex reflected;
  Complex total() const { return incident + reflected; }
};

/// Incident and reflected parts of the matched illuminated field. Above the
/// critical angle the reflected wave carries e^{i delta}; below it e^{-i pi/2}.
/// Inside the grazing collar the field is the single travelling term
/// sqrt(2) e^{-i pi/4} (psi0/sqrt k) f(x) e^{iknx} and `reflected` is 0.
IlluminatedTerms illuminated_terms(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0,
                                   double x, double y);
Complex illuminated_field(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0, double x,
                          double y);

/// The unmatched product form: amplitude bracket [sqrt(bI) f1 + sqrt(aI) f2]
/// times [incident + e^{-i pi/2} reflected] exponentials.
Complex illuminated_field_product_form(const MediumConfig& cfg, const WavefrontProfile& f1,
                                       const WavefrontProfile& f2, Complex psi0, double x, double y);

Complex shadow_field(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0, double x, double y);

/// psi0_S f1S(x) and psi0_S f2S(x) from the matching conditions with constant C.
std::pair<Complex, Complex> shadow_profiles(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0,
                                            Complex C, double x);

/// Shadow field built from the split profiles; C cancels in the sum.
Complex shadow_field_split(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0, Complex C,
                           double x, double y);

struct GridSpec {
  double x0 = 0.0, x1 = 1.0;
  int nx = 2;
  double y0 = -1.0, y1 = 1.0;
  int ny = 2;

  double dx() const { return (x1 - x0) / (nx - 1); }
  double dy() const { return (y1 - y0) / (ny - 1); }
  double x(int i) const { return x0 + i * dx(); }
  double y(int j) const { return y0 + j * dy(); }
};

struct FieldGrid {
  GridSpec spec;
  std::vector<Complex> values;  // row-major, index j * nx + i (y outer)
  std::vector<Region> regions;
  double n = 0.0, theta_i = 0.0, k = 0.0;
  Complex psi0;
  std::string profile;

  Complex at(int i, int j) const { return values[static_cast<std::size_t>(j) * spec.nx + i]; }
};

/// Samples the field on the grid. Rejects grids with a sample row on y = 0
/// (the matching locus) and shadow rows below the critical angle.
FieldGrid synthesize(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0, const GridSpec& spec);

struct BoundaryReport {
  double epsilon = 0.0;
  std::vector<double> x;
  std::vector<Complex> value_mismatch;       // psi_I(x, eps) - psi_S(x, -eps)
  std::vector<Complex> derivative_mismatch;  // one-sided d/dy extrapolated to 0+ and 0-
  double max_value_mismatch = 0.0;
  double max_derivative_mismatch = 0.0;      // divided by k max|psi|
  double max_identity_residual = 0.0;        // f2I from the Fresnel bracket vs e^{i delta}
  double max_split_residual = 0.0;           // |psi0_S f2S - cos(delta) psi0_S f1S|
};

BoundaryReport boundary_match(const MediumConfig& cfg, const WavefrontProfile& f1, Complex psi0,
                              const std::vector<double>& xs, double epsilon = 1e-5, Complex C = 0.0);

struct HelmholtzSample {
  double k = 0.0;
  double residual = 0.0;  // max |lap psi + k^2 n^2 psi| / (k^2 |psi| + eps0)
};

/// Normalized residual over the interior of a single-region grid, using the
/// tenth-order central Laplacian. Fault::resolution if a spacing exceeds
/// lambda/10, Fault::region_straddling if the grid has mixed region tags.
double helmholtz_residual(const FieldGrid& grid);

struct HelmholtzScaling {
  std::vector<HelmholtzSample> samples;
  double slope = 0.0;  // least-squares slope of log residual vs log k
};

/// Residual ladder for the illuminated field: for each k the grid is
/// `window` x `window` centred on (xc, yc) with spacing lambda / points_per_wavelength.
HelmholtzScaling helmholtz_scaling(double n, double theta_i, const WavefrontProfile& f1,
                                   const std::vector<double>& ks, double xc, double yc, double window,
                                   double points_per_wavelength = 20.0);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace tir::field
