#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature for complex-valued
// integrands on finite intervals.

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "tir/common.hpp"

namespace tir::quad {

struct Result {
  Complex value{};
  double abs_error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

namespace detail {

// Kronrod nodes on [0,1] (symmetric), weights for K15 and embedded G7.
inline constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Complex value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const Complex fc = f(c);
  Complex kron = fc * kKronrod[7];
  Complex gauss = fc * kGauss[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kNodes[j];
    const Complex s = f(c - dx) + f(c + dx);
    kron += kKronrod[j] * s;
    if (j % 2 == 1) gauss += kGauss[j / 2] * s;
  }
  kron *= h;
  gauss *= h;
  return Panel{a, b, kron, std::abs(kron - gauss)};
}

}  // namespace detail

/// Integrates f over [a, b] until the summed error estimate is below
/// max(abs_tol, rel_tol * |I|) or `max_panels` panels are in use.
template <class F>
Result integrate(F&& f, double a, double b, double abs_tol, double rel_tol,
                 int max_panels = 4000) {
  std::priority_queue<detail::Panel> panels;
  Result out;
  auto first = detail::gk15(f, a, b);
  out.evaluations = 15;
  panels.push(first);
  Complex total = first.value;
  double err = first.error;
  while (err > std::max(abs_tol, rel_tol * std::abs(total)) &&
         static_cast<int>(panels.size()) < max_panels) {
    auto worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      panels.push(worst);
      break;
    }
    auto left = detail::gk15(f, worst.a, mid);
    auto right = detail::gk15(f, mid, worst.b);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  // Re-sum to drop accumulated cancellation in the running totals.
  total = 0.0;
  err = 0.0;
  while (!panels.empty()) {
    total += panels.top().value;
    err += panels.top().error;
    panels.pop();
  }
  out.value = total;
  out.abs_error = err;
  out.converged = err <= std::max(abs_tol, rel_tol * std::abs(total));
  return out;
}

/// Sums integrate() over consecutive breakpoints.
template <class F>
Result integrate_pieces(F&& f, const std::vector<double>& breaks, double abs_tol, double rel_tol) {
  Result out;
  out.converged = true;
  const double share = abs_tol / std::max<std::size_t>(1, breaks.size() - 1);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    auto r = integrate(f, breaks[i], breaks[i + 1], share, rel_tol);
    out.value += r.value;
    out.abs_error += r.abs_error;
    out.evaluations += r.evaluations;
    out.converged = out.converged && r.converged;
  }
  return out;
}

}  // namespace tir::quad
