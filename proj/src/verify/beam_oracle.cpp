#include <cmath>

#include "tir/verify/oracles.hpp"

namespace tir::verify {

BeamAtInterface gaussian_beam_reflection(double n, double theta_i, double k, double sigma, double x0, double h,
                                         int count) {
  const double kn = k * n;
  const double kx0 = kn * std::sin(theta_i);
  const double width = 2.0 / sigma;  // e^{-1} half-width of the spectrum
  const int nodes = 801;
  const double span = 9.0 * width;
  const double dk = 2.0 * span / (nodes - 1);
  std::vector<double> kx(nodes);
  std::vector<Complex> a_inc(nodes), a_ref(nodes);
  for (int j = 0; j < nodes; ++j) {
    kx[j] = kx0 - span + j * dk;
    const double s = kx[j] / kn;  // sin of the component's angle
    const double excess = (s - 1.0 / n) * (s + 1.0 / n);
    const double c = std::sqrt((1.0 - s) * (1.0 + s));
    // Fresnel TE phase for this component, written independently of the field module
    const Complex r = Complex(c, -std::sqrt(excess)) / Complex(c, std::sqrt(excess));
    const double g = std::exp(-sigma * sigma * (kx[j] - kx0) * (kx[j] - kx0) / 4.0) * dk;
    a_inc[j] = g;
    a_ref[j] = g * r;
  }
  BeamAtInterface out;
  for (int i = 0; i < count; ++i) {
    const double x = x0 + i * h;
    Complex inc = 0.0, ref = 0.0;
    for (int j = 0; j < nodes; ++j) {
      const Complex e = std::polar(1.0, kx[j] * x);
      inc += a_inc[j] * e;
      ref += a_ref[j] * e;
    }
    out.x.push_back(x);
    out.incident.push_back(inc);
    out.reflected.push_back(ref);
  }
  return out;
}

int correlation_peak_lag(const std::vector<Complex>& a, const std::vector<Complex>& b, int max_lag) {
  const int n = static_cast<int>(std::min(a.size(), b.size()));
  int best = 0;
  double best_val = -1.0;
  for (int lag = -max_lag; lag <= max_lag; ++lag) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const int j = i - lag;
      if (j >= 0 && j < n) acc += std::abs(a[i]) * std::abs(b[j]);
    }
    if (acc > best_val) {
      best_val = acc;
      best = lag;
    }
  }
  return best;
}

}  // namespace tir::verify
