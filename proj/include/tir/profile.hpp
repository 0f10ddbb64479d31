#pragma once

// Wavefront amplitude profiles f(w). Shadow-side formulas evaluate them at
// complex arguments, so every profile carries the half-width of the strip
// |Im w| <= strip in which it may be evaluated.

#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "tir/common.hpp"

namespace tir {

enum class Smoothness { entire, analytic_strip, piecewise_c1, unknown };

class WavefrontProfile {
 public:
  using Fn = std::function<Complex(Complex)>;

  static WavefrontProfile constant(Complex c);
  /// exp(-(w - w0)^2 / sigma^2); entire.
  static WavefrontProfile gaussian(double w0, double sigma);
  /// (1 + cos(pi (w - c) / a)) / 2 for |Re(w - c)| < a, else 0. Complex use is
  /// limited to the declared strip.
  static WavefrontProfile raised_cosine(double center, double half_width, double strip);
  /// User profile. Without a declared strip only real arguments are accepted.
  static WavefrontProfile custom(Fn fn, Smoothness smoothness, std::optional<double> strip = {},
                                 std::string name = "custom");

  /// Throws Fault::strip_violation when |Im w| exceeds the strip.
  Complex operator()(Complex w) const;
  Complex operator()(double x) const { return (*this)(Complex(x, 0.0)); }

  double strip() const noexcept { return strip_; }
  Smoothness smoothness() const noexcept { return smoothness_; }
  const std::string& name() const noexcept { return name_; }

 private:
  WavefrontProfile(Fn fn, Smoothness s, double strip, std::string name)
      : fn_(std::move(fn)), smoothness_(s), strip_(strip), name_(std::move(name)) {}

  Fn fn_;
  Smoothness smoothness_;
  double strip_;  // +inf for entire profiles
  std::string name_;
};

}  // namespace tir
