#pragma once

// Shared scalar types, constants and the error hierarchy used by every module.

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tir {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Broad class of a failure; the CLI maps each class to its own exit code.
enum class ErrorClass { domain, tolerance, io, config };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string_view module, const std::string& what)
      : std::runtime_error(std::string(module) + ": " + what), cls_(cls), module_(module) {}

  ErrorClass error_class() const noexcept { return cls_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorClass cls_;
  std::string module_;
};

/// The specific precondition that was violated.
enum class Fault {
  invalid_argument,
  envelope,               // outside documented accuracy envelope
  singularity,            // branch point at z = 0
  divergence,             // asymptotic truncation guard failed
  on_stokes_ray,
  pole_on_path,
  phase_domain,
  under_range,
  subcritical,
  critical_incidence,
  grazing,
  strip_violation,
  degenerate_jacobian,
  elliptic_input,
  vertical_characteristic,
  out_of_region,
  region_straddling,
  resolution,
};

class DomainError : public Error {
 public:
  DomainError(std::string_view module, Fault fault, const std::string& what)
      : Error(ErrorClass::domain, module, what), fault_(fault) {}
  Fault fault() const noexcept { return fault_; }

 private:
  Fault fault_;
};

class ToleranceError : public Error {
 public:
  ToleranceError(std::string_view module, const std::string& what)
      : Error(ErrorClass::tolerance, module, what) {}
};

class IoError : public Error {
 public:
  IoError(std::string_view module, const std::string& what) : Error(ErrorClass::io, module, what) {}
};

class ConfigError : public Error {
 public:
  ConfigError(std::string_view module, const std::string& what)
      : Error(ErrorClass::config, module, what) {}
};

/// Phase of z mapped into [0, 2*pi).
inline double phase_0_2pi(Complex z) {
  double ph = std::arg(z);
  if (ph < 0.0) ph += kTwoPi;
  if (ph >= kTwoPi) ph -= kTwoPi;
  return ph;
}

}  // namespace tir
