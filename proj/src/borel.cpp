#include "tir/borel.hpp"

#include <algorithm>
#include <cmath>

#include "tir/airy.hpp"
#include "tir/quadrature.hpp"

namespace tir::borel {
namespace {

constexpr std::string_view kModule = "borel";
constexpr double kTilt = 0.5;        // ray rotation used near the pole
constexpr double kOnAxis = 1e-9;     // pole angle treated as exactly on the axis

// Integral along t = r e^{i phi}; the log-scaled integrand keeps large n finite.
Complex ray_integral(int n, Complex z, double phi) {
  const Complex dir = std::polar(1.0, phi);
  const double lg = std::lgamma(n + 1.0);
  auto f = [&](double r) -> Complex {
    if (r == 0.0) return n == 0 ? dir : Complex(0.0);
    const Complex t = r * dir;
    const Complex log_t(std::log(r), phi);
    return std::exp(static_cast<double>(n) * log_t - t - lg) / (1.0 + t / z) * dir;
  };
  const double c = std::cos(phi);
  const double peak = n / c;
  const double end = (n + 60.0 + 12.0 * std::sqrt(n + 1.0)) / c;
  std::vector<double> breaks{0.0};
  if (peak > 0.0) breaks.push_back(peak);
  // the pole distance along the ray sets a local scale worth resolving
  const double pole_r = std::abs(z);
  if (pole_r > 0.0 && pole_r < end && std::abs(pole_r - peak) > 1e-3) breaks.push_back(pole_r);
  if (2.0 * peak + 5.0 < end) breaks.push_back(2.0 * peak + 5.0);
  breaks.push_back(end);
  std::sort(breaks.begin(), breaks.end());
  auto res = quad::integrate_pieces(f, breaks, 1e-14, 1e-14);
  return res.value;
}

double pole_angle(Complex z) { return std::arg(-z); }

}  // namespace

Complex lambda_n(const BorelKernel& k) {
  if (k.n < 0) throw DomainError(kModule, Fault::invalid_argument, "order n must be >= 0");
  if (k.z == 0.0) throw DomainError(kModule, Fault::invalid_argument, "z must be nonzero");
  const double a = pole_angle(k.z);
  if (std::abs(a) < kOnAxis && k.z.real() < 0.0) {
    throw DomainError(kModule, Fault::pole_on_path, "ph z = pi puts the pole on the integration path");
  }
  // Tilt away from the pole only when it is close to the positive real axis.
  double phi = 0.0;
  if (std::abs(a) < kTilt) phi = a > 0.0 ? -kTilt : kTilt;
  return ray_integral(k.n, k.z, phi);
}

Complex lambda_n_lateral(const BorelKernel& k, int side) {
  if (k.n < 0) throw DomainError(kModule, Fault::invalid_argument, "order n must be >= 0");
  if (k.z == 0.0) throw DomainError(kModule, Fault::invalid_argument, "z must be nonzero");
  if (side != 1 && side != -1) throw DomainError(kModule, Fault::invalid_argument, "side must be +-1");
  const double phi = side * kTilt;
  const double a = pole_angle(k.z);
  const bool swept = std::abs(a) >= kOnAxis && (side > 0 ? (a > 0.0 && a < phi) : (a < 0.0 && a > phi));
  if (swept) {
    throw DomainError(kModule, Fault::invalid_argument,
                      "lateral ray on this side would sweep across the pole");
  }
  return ray_integral(k.n, k.z, phi);
}

Complex monodromy_jump(const BorelKernel& k, int turns) {
  if (k.z == 0.0) throw DomainError(kModule, Fault::invalid_argument, "z must be nonzero");
  if (turns != 1 && turns != -1) throw DomainError(kModule, Fault::invalid_argument, "turns must be +-1");
  const Complex i(0.0, 1.0);
  // -+ 2 pi i e^{+-i pi n} z^{n+1} e^z / n!, assembled in logs
  const Complex log_mag = (k.n + 1.0) * std::log(k.z) + k.z - std::lgamma(k.n + 1.0);
  const double sign_n = (k.n % 2 == 0) ? 1.0 : -1.0;
  return -static_cast<double>(turns) * kTwoPi * i * sign_n * std::exp(log_mag);
}

Complex lambda_n_continued(const BorelKernel& k, int turns) {
  return lambda_n(k) + monodromy_jump(k, turns);
}

LateTermModel LateTermModel::for_airy(Complex z, int s_max) {
  if (s_max < 1) throw DomainError(kModule, Fault::invalid_argument, "s_max must be >= 1");
  const double r = std::abs(z);
  if (r == 0.0) throw DomainError(kModule, Fault::invalid_argument, "z must be nonzero");
  const double ph = phase_0_2pi(z);
  const Complex zeta = airy::zeta_on_branch(r, ph);
  const auto& c = airy::asymptotic_coefficients();
  LateTermModel m;
  m.F = 2.0 * zeta;
  m.s_max = s_max;
  Complex power = 1.0;
  for (int s = 0; s <= s_max; ++s) {
    m.W_early.push_back(c[s] * power);
    power /= zeta;
  }
  return m;
}

namespace {

void check_model(const LateTermModel& model) {
  if (model.s_max < 1) throw DomainError(kModule, Fault::invalid_argument, "s_max must be >= 1");
  if (std::abs(model.F) == 0.0) throw DomainError(kModule, Fault::invalid_argument, "|F| must be > 0");
  if (static_cast<int>(model.W_early.size()) < model.s_max) {
    throw DomainError(kModule, Fault::invalid_argument, "fewer early terms than s_max");
  }
}

// Tail sum with `terms` inner terms; lambda supplies Lambda_j(F).
template <class LambdaFn>
Complex tail_sum(const LateTermModel& model, int n, int terms, LambdaFn&& lambda) {
  const Complex log_minus_F = std::log(model.F) - Complex(0.0, kPi);  // ph(-F) = ph F - pi
  Complex total = 0.0;
  for (int s = 0; s < terms; ++s) {
    const Complex scale =
        std::exp((static_cast<double>(s) - n) * log_minus_F + std::lgamma(static_cast<double>(n - s)));
    total += scale * model.W_early[s] * lambda(n - s - 1);
  }
  return total / kTwoPi;
}

}  // namespace

Complex late_term(const LateTermModel& model, int m) {
  check_model(model);
  if (m < kLateTermMin) {
    throw DomainError(kModule, Fault::under_range,
                      "late-term formula needs m >= " + std::to_string(kLateTermMin));
  }
  const Complex log_F = std::log(model.F);
  const Complex log_minus_F = log_F - Complex(0.0, kPi);
  Complex total = 0.0;
  for (int s = 0; s < model.s_max && s < m; ++s) {
    total += std::exp(static_cast<double>(s) * log_minus_F - static_cast<double>(m) * log_F +
                      std::lgamma(static_cast<double>(m - s))) *
             model.W_early[s];
  }
  return total / kTwoPi;
}

Complex resum_tail(const LateTermModel& model, int n) {
  check_model(model);
  if (n <= model.s_max) throw DomainError(kModule, Fault::invalid_argument, "need n > s_max");
  if (std::abs(std::arg(model.F)) >= kPi - kOnAxis) {
    throw DomainError(kModule, Fault::phase_domain, "resummation requires |ph F| < pi");
  }
  auto lam = [&](int j) { return lambda_n(BorelKernel{j, model.F}); };
  const Complex value = tail_sum(model, n, model.s_max, lam);
  if (static_cast<int>(model.W_early.size()) > model.s_max && n > model.s_max + 1) {
    const Complex extra = tail_sum(model, n, model.s_max + 1, lam);
    if (std::abs(extra - value) >= 1e-8) {
      throw ToleranceError(kModule, "resummed tail not stabilized in s_max (change " +
                                        std::to_string(std::abs(extra - value) / 1e-12) + "e-12, n=" + std::to_string(n) + ")");
    }
  }
  return value;
}

Complex resum_tail_lateral(const LateTermModel& model, int n, int side) {
  check_model(model);
  if (n <= model.s_max) throw DomainError(kModule, Fault::invalid_argument, "need n > s_max");
  auto lam = [&](int j) { return lambda_n_lateral(BorelKernel{j, model.F}, side); };
  return tail_sum(model, n, model.s_max, lam);
}

}  // namespace tir::borel
