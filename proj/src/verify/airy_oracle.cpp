#include <algorithm>
#include <cmath>

#include "tir/quadrature.hpp"
#include "tir/verify/oracles.hpp"

namespace tir::verify {
namespace {

// Straight piece t(s) = origin + s * dir for s in [0, length].
struct Piece {
  Complex origin;
  Complex dir;
  double length;
  double sign;  // orientation relative to the contour
};

Complex integrand(Complex z, Complex t) { return std::exp(t * t * t / 3.0 - z * t); }

double piece_peak(Complex z, const Piece& p) {
  double m = 0.0;
  for (int i = 0; i <= 400; ++i) m = std::max(m, std::abs(integrand(z, p.origin + p.dir * (p.length * i / 400.0))));
  return m;
}

// Valley rays leave the end points along e^{+-i pi/3}; long enough that
// Re(t^3) has buried the integrand.
double ray_length(Complex start) { return 2.0 * (std::abs(start) + 1.0) + 8.0; }

std::vector<Piece> single_saddle(Complex z) {
  const Complex t0 = std::sqrt(z);
  const Complex up = std::polar(1.0, kPi / 3), dn = std::polar(1.0, -kPi / 3);
  const double L = ray_length(t0);
  return {{t0, dn, L, -1.0}, {t0, up, L, 1.0}};
}

std::vector<Piece> two_saddle(Complex z) {
  const Complex w = std::sqrt(-z);
  const Complex lo(w.imag(), -w.real()), hi(-w.imag(), w.real());  // -i w, +i w
  const Complex up = std::polar(1.0, kPi / 3), dn = std::polar(1.0, -kPi / 3);
  const double L = ray_length(w);
  const Complex seg = hi - lo;
  const double seg_len = std::abs(seg);
  std::vector<Piece> path{{lo, dn, L, -1.0}, {hi, up, L, 1.0}};
  if (seg_len > 0.0) path.push_back({lo, seg / seg_len, seg_len, 1.0});
  return path;
}

}  // namespace

AiryQuadrature ai_quadrature(Complex z) {
  auto a = single_saddle(z), b = two_saddle(z);
  auto peak = [&](const std::vector<Piece>& path) {
    double m = 0.0;
    for (const auto& p : path) m = std::max(m, piece_peak(z, p));
    return m;
  };
  const double pa = peak(a), pb = peak(b);
  const auto& path = pa <= pb ? a : b;
  const double scale = std::min(pa, pb);

  AiryQuadrature out;
  Complex total = 0.0;
  for (const auto& p : path) {
    auto f = [&](double s) { return integrand(z, p.origin + p.dir * s) * p.dir; };
    std::vector<double> breaks{0.0};
    for (double b2 : {0.5, 1.0, 2.0, 4.0, 8.0}) {
      if (b2 < p.length) breaks.push_back(b2);
    }
    breaks.push_back(p.length);
    const auto r = quad::integrate_pieces(f, breaks, 1e-17 * scale, 1e-15);
    total += p.sign * r.value;
    out.abs_error += r.abs_error;
  }
  out.value = total / Complex(0.0, kTwoPi);
  out.abs_error /= kTwoPi;
  out.conditioning = scale / std::abs(out.value);
  return out;
}

Complex lambda_series(int n, Complex z) { return lambda_continued_series(n, z, 0); }

Complex lambda_continued_series(int n, Complex z, int turns) {
  constexpr double kEulerGamma = 0.577215664901532860606512090082402;
  Complex sum = 0.0, term = 1.0;
  for (int k = 1; k < 400; ++k) {
    term *= -z / static_cast<double>(k);
    const Complex add = term / static_cast<double>(k);
    sum += add;
    if (std::abs(add) < 1e-18 * std::max(1.0, std::abs(sum))) break;
  }
  const Complex log_z = std::log(z) + Complex(0.0, kTwoPi * turns);
  Complex lam = z * std::exp(z) * (-kEulerGamma - log_z - sum);
  for (int j = 1; j <= n; ++j) lam = z / static_cast<double>(j) * (1.0 - lam);
  return lam;
}

}  // namespace tir::verify
