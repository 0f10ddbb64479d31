#include "tir/profile.hpp"

#include <cmath>

namespace tir {

namespace {
constexpr std::string_view kModule = "transport";
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

WavefrontProfile WavefrontProfile::constant(Complex c) {
  return WavefrontProfile([c](Complex) { return c; }, Smoothness::entire, kInf, "constant");
}

WavefrontProfile WavefrontProfile::gaussian(double w0, double sigma) {
  if (!(sigma > 0.0)) throw ConfigError(kModule, "gaussian width must be > 0");
  return WavefrontProfile(
      [w0, sigma](Complex w) {
        const Complex d = (w - w0) / sigma;
        return std::exp(-d * d);
      },
      Smoothness::entire, kInf, "gaussian");
}

WavefrontProfile WavefrontProfile::raised_cosine(double center, double half_width, double strip) {
  if (!(half_width > 0.0)) throw ConfigError(kModule, "raised-cosine half width must be > 0");
  if (!(strip >= 0.0)) throw ConfigError(kModule, "strip half-width must be >= 0");
  return WavefrontProfile(
      [center, half_width](Complex w) -> Complex {
        const Complex d = w - center;
        if (std::abs(d.real()) >= half_width) return 0.0;
        return 0.5 * (1.0 + std::cos(kPi * d / half_width));
      },
      Smoothness::piecewise_c1, strip, "raised_cosine");
}

WavefrontProfile WavefrontProfile::custom(Fn fn, Smoothness smoothness, std::optional<double> strip,
                                          std::string name) {
  if (!fn) throw ConfigError(kModule, "custom profile needs a callable");
  double s = strip.value_or(0.0);
  if (smoothness == Smoothness::entire && !strip) s = kInf;
  return WavefrontProfile(std::move(fn), smoothness, s, std::move(name));
}

Complex WavefrontProfile::operator()(Complex w) const {
  if (std::abs(w.imag()) > strip_) {
    throw DomainError(kModule, Fault::strip_violation,
                      "profile '" + name_ + "' evaluated outside its analyticity strip (|Im w| = " +
                          std::to_string(std::abs(w.imag())) + ")");
  }
  return fn_(w);
}

}  // namespace tir
