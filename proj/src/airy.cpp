#include "tir/airy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tir::airy {
namespace {

constexpr std::string_view kModule = "airy";

constexpr double kAi0 = 0.355028053887817239260063186004183;    // Ai(0)
constexpr double kMinusAip0 = 0.258819403792806798405183560189203;  // -Ai'(0)
constexpr double kSqrt3 = 1.732050807568877293527446341505872;
const double kInvTwoSqrtPi = 0.5 / std::sqrt(kPi);

// Path selection for ai_exact.
constexpr double kSeriesAlways = 2.0;
constexpr double kAsymptoticFrom = 12.0;
constexpr double kSeriesMaxCondition = 1e4;
constexpr double kStepLength = 0.4;
constexpr int kCoefficientCount = 150;

struct Maclaurin {
  Complex f, g, fp, gp;
  double af = 0, ag = 0, afp = 0, agp = 0;
};

Maclaurin maclaurin(Complex z) {
  const Complex z3 = z * z * z;
  Maclaurin m;
  Complex t = 1.0, s = z, u = 0.5 * z * z, v = 1.0;
  m.f = t;
  m.g = s;
  m.fp = u;
  m.gp = v;
  m.af = 1.0;
  m.ag = std::abs(s);
  m.afp = std::abs(u);
  m.agp = 1.0;
  for (int k = 1; k < 400; ++k) {
    const double dk = k;
    t *= z3 / ((3 * dk - 1) * (3 * dk));
    s *= z3 / ((3 * dk) * (3 * dk + 1));
    v *= z3 / ((3 * dk - 2) * (3 * dk));
    if (k >= 2) u *= z3 / ((3 * dk - 1) * (3 * dk - 3));
    m.f += t;
    m.g += s;
    m.gp += v;
    if (k >= 2) m.fp += u;
    m.af += std::abs(t);
    m.ag += std::abs(s);
    m.agp += std::abs(v);
    if (k >= 2) m.afp += std::abs(u);
    const double largest = std::max({std::abs(t), std::abs(s), std::abs(u), std::abs(v)});
    const double scale = std::max({m.af, m.ag, m.afp, m.agp});
    if (k > 3 && largest < 1e-18 * scale) break;
  }
  return m;
}

struct Pair {
  Complex ai, aip;
};

double cos_three_halves(double phase) { return std::cos(1.5 * phase); }

Dominance dominance_of(Solution s, double branch_phase) {
  const double c = cos_three_halves(branch_phase);
  if (std::abs(c) < 1e-12) return Dominance::comparable;
  const bool minus_decays = c > 0.0;  // Re(zeta) > 0 makes exp(-zeta) small
  if (s == Solution::w_minus) return minus_decays ? Dominance::subdominant : Dominance::dominant;
  return minus_decays ? Dominance::dominant : Dominance::subdominant;
}

// Branch phase used for the w- term: continuous with ph z = 0 in the last sector.
double branch_for_sector(double ph) { return ph > kStokesRay2 ? ph - kTwoPi : ph; }

// Fully summed expansion: value and derivative of w+- on a branch, summed
// until terms fall below 1e-17 relative or start growing. `smallest` gets the
// last term magnitude used as a truncation bound.
Pair full_w(double r, double phb, Sign sign, double* smallest) {
  const auto& c = asymptotic_coefficients();
  const Complex zeta = zeta_on_branch(r, phb);
  const Complex inv = 1.0 / zeta;
  const double sg = sign == Sign::minus ? -1.0 : 1.0;
  Complex sum = 1.0, dsum = 1.0, power = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  double last = 1.0;
  for (int m = 1; m < kCoefficientCount; ++m) {
    power *= sg * inv;
    const Complex term = c[m] * power;
    const double mag = std::abs(term);
    if (mag > prev) break;
    const double dm = -(6.0 * m + 1.0) / (6.0 * m - 1.0) * c[m];
    sum += term;
    dsum += dm * power;
    prev = mag;
    last = mag;
    if (mag < 1e-17) break;
  }
  if (smallest) *smallest = std::max(*smallest, last);
  const Complex quarter = std::polar(std::pow(r, -0.25), -0.25 * phb);
  const Complex quarter_up = std::polar(std::pow(r, 0.25), 0.25 * phb);
  const Complex e = std::exp(sg * zeta);
  return Pair{quarter * e * sum, sg * quarter_up * e * dsum};
}

Pair asymptotic_pair(Complex z, double* bound) {
  const double r = std::abs(z);
  const double ph = phase_0_2pi(z);
  double smallest = 0.0;
  Pair out{};
  if (ph >= kStokesRay1 && ph <= kStokesRay2) {
    const Pair wm = full_w(r, ph, Sign::minus, &smallest);
    const Pair wp = full_w(r, ph, Sign::plus, &smallest);
    const Complex i(0.0, 1.0);
    out.ai = kInvTwoSqrtPi * (wm.ai + i * wp.ai);
    out.aip = kInvTwoSqrtPi * (wm.aip + i * wp.aip);
  } else {
    const Pair wm = full_w(r, branch_for_sector(ph), Sign::minus, &smallest);
    out.ai = kInvTwoSqrtPi * wm.ai;
    out.aip = kInvTwoSqrtPi * wm.aip;
  }
  if (bound) *bound = smallest;
  return out;
}

// Taylor stepping of w'' = z w from `from` to `to` in straight segments.
Pair taylor_walk(Complex from, Complex to, Pair start) {
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(to - from) / kStepLength)));
  const Complex h = (to - from) / static_cast<double>(steps);
  Complex center = from;
  Complex w = start.ai, wp = start.aip;
  for (int n = 0; n < steps; ++n) {
    Complex a_prev = 0.0, a0 = w, a1 = wp;
    Complex value = a0 + a1 * h;
    Complex deriv = a1;
    Complex hp = h;  // h^(k-1) for k = 2
    int quiet = 0;
    for (int k = 0; k < 300; ++k) {
      // a_{k+2} from a_k and a_{k-1}
      const Complex a2 = (center * a0 + a_prev) / ((k + 1.0) * (k + 2.0));
      const Complex dterm = (k + 2.0) * a2 * hp;
      hp *= h;
      const Complex vterm = a2 * hp;
      value += vterm;
      deriv += dterm;
      const double scale = std::abs(value) + std::abs(deriv);
      quiet = (std::abs(vterm) + std::abs(dterm) < 1e-18 * scale) ? quiet + 1 : 0;
      if (k > 4 && quiet >= 2) break;
      a_prev = a0;
      a0 = a1;
      a1 = a2;
    }
    w = value;
    wp = deriv;
    center += h;
  }
  return Pair{w, wp};
}

Pair exact_pair(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(kModule, Fault::invalid_argument, "non-finite argument");
  }
  const double r = std::abs(z);
  if (r <= kSeriesAlways) {
    const Maclaurin m = maclaurin(z);
    return Pair{kAi0 * m.f - kMinusAip0 * m.g, kAi0 * m.fp - kMinusAip0 * m.gp};
  }
  if (r >= kAsymptoticFrom) {
    double bound = 0.0;
    const Pair p = asymptotic_pair(z, &bound);
    const bool finite = std::isfinite(p.ai.real()) && std::isfinite(p.ai.imag()) &&
                        std::isfinite(p.aip.real()) && std::isfinite(p.aip.imag());
    if (r > kEnvelopeRadius && (bound > 1e-10 || !finite)) {
      throw DomainError(kModule, Fault::envelope,
                        "|z| beyond the accuracy envelope and the asymptotic tail bound cannot certify 1e-10");
    }
    if (!finite) throw DomainError(kModule, Fault::envelope, "Ai overflows double at this argument");
    return p;
  }
  const Maclaurin m = maclaurin(z);
  const Pair series{kAi0 * m.f - kMinusAip0 * m.g, kAi0 * m.fp - kMinusAip0 * m.gp};
  const double cond_ai = (kAi0 * m.af + kMinusAip0 * m.ag) / std::abs(series.ai);
  const double cond_aip = (kAi0 * m.afp + kMinusAip0 * m.agp) / std::abs(series.aip);
  if (std::max(cond_ai, cond_aip) <= kSeriesMaxCondition) return series;
  // The series cancels where Ai is subdominant; walking inward from the
  // asymptotic region is stable there.
  const Complex far = z * (kAsymptoticFrom / r);
  return taylor_walk(far, z, asymptotic_pair(far, nullptr));
}

}  // namespace

AsymptoticOrder::AsymptoticOrder(int n_terms) : n_(n_terms) {
  if (n_terms < 1) throw DomainError(kModule, Fault::invalid_argument, "asymptotic order must be >= 1");
  if (n_terms >= kCoefficientCount) {
    throw DomainError(kModule, Fault::invalid_argument, "asymptotic order exceeds coefficient table");
  }
}

const std::vector<double>& asymptotic_coefficients() {
  static const std::vector<double> table = [] {
    std::vector<double> c(kCoefficientCount);
    c[0] = 1.0;
    for (int m = 0; m + 1 < kCoefficientCount; ++m) {
      c[m + 1] = c[m] * (6.0 * m + 5.0) * (6.0 * m + 1.0) / (72.0 * (m + 1.0));
    }
    return c;
  }();
  return table;
}

Complex ai_exact(Complex z) { return exact_pair(z).ai; }
Complex ai_prime_exact(Complex z) { return exact_pair(z).aip; }

Complex ai_series(Complex z, double* condition) {
  const Maclaurin m = maclaurin(z);
  const Complex v = kAi0 * m.f - kMinusAip0 * m.g;
  if (condition) *condition = (kAi0 * m.af + kMinusAip0 * m.ag) / std::abs(v);
  return v;
}

Complex ai_prime_series(Complex z, double* condition) {
  const Maclaurin m = maclaurin(z);
  const Complex v = kAi0 * m.fp - kMinusAip0 * m.gp;
  if (condition) *condition = (kAi0 * m.afp + kMinusAip0 * m.agp) / std::abs(v);
  return v;
}

Complex bi_series(Complex z) {
  const Maclaurin m = maclaurin(z);
  return kSqrt3 * (kAi0 * m.f + kMinusAip0 * m.g);
}

Complex bi_prime_series(Complex z) {
  const Maclaurin m = maclaurin(z);
  return kSqrt3 * (kAi0 * m.fp + kMinusAip0 * m.gp);
}

Complex zeta_on_branch(double modulus, double phase) {
  return std::polar(2.0 / 3.0 * std::pow(modulus, 1.5), 1.5 * phase);
}

Complex wkb_approximant_on_branch(double modulus, double phase, Sign sign) {
  if (modulus == 0.0) throw DomainError(kModule, Fault::singularity, "branch point at z = 0");
  const double sg = sign == Sign::minus ? -1.0 : 1.0;
  return std::polar(std::pow(modulus, -0.25), -0.25 * phase) *
         std::exp(sg * zeta_on_branch(modulus, phase));
}

Complex wkb_approximant(Complex z, Sign sign) {
  return wkb_approximant_on_branch(std::abs(z), phase_0_2pi(z), sign);
}

Complex corrective_series_on_branch(double modulus, double phase, Sign sign, AsymptoticOrder order) {
  if (modulus == 0.0) throw DomainError(kModule, Fault::singularity, "branch point at z = 0");
  const auto& c = asymptotic_coefficients();
  const Complex zeta = zeta_on_branch(modulus, phase);
  const int n = order.n_terms();
  // optimal-truncation guard: |W_n| < |W_{n-1}|  <=>  c_n / c_{n-1} < |zeta|
  if (c[n] / c[n - 1] >= std::abs(zeta)) {
    throw DomainError(kModule, Fault::divergence,
                      "truncation guard failed: term " + std::to_string(n) +
                          " is not smaller than its predecessor at this |z|");
  }
  const double sg = sign == Sign::minus ? -1.0 : 1.0;
  const Complex step = sg / zeta;
  Complex sum = 0.0, power = 1.0;
  for (int m = 0; m < n; ++m) {
    sum += c[m] * power;
    power *= step;
  }
  return sum;
}

Complex corrective_series(Complex z, Sign sign, AsymptoticOrder order) {
  return corrective_series_on_branch(std::abs(z), phase_0_2pi(z), sign, order);
}

SectorRepresentation sector_of(double ph_z) {
  if (!(ph_z >= 0.0 && ph_z < kTwoPi)) {
    throw DomainError(kModule, Fault::invalid_argument, "phase must lie in [0, 2*pi)");
  }
  if (std::abs(ph_z - kStokesRay1) < 1e-12 || std::abs(ph_z - kStokesRay2) < 1e-12) {
    throw DomainError(kModule, Fault::on_stokes_ray,
                      "phase lies on a Stokes ray; perturb it or use ai_exact");
  }
  const Complex coeff_minus(kInvTwoSqrtPi, 0.0);
  const Complex coeff_plus(0.0, kInvTwoSqrtPi);
  SectorRepresentation rep;
  if (ph_z < kStokesRay1) {
    rep.lower = 0.0;
    rep.upper = kStokesRay1;
    rep.terms.push_back({Solution::w_minus, coeff_minus, dominance_of(Solution::w_minus, ph_z)});
  } else if (ph_z < kStokesRay2) {
    rep.lower = kStokesRay1;
    rep.upper = kStokesRay2;
    rep.terms.push_back({Solution::w_minus, coeff_minus, dominance_of(Solution::w_minus, ph_z)});
    rep.terms.push_back({Solution::w_plus, coeff_plus, dominance_of(Solution::w_plus, ph_z)});
  } else {
    rep.lower = kStokesRay2;
    rep.upper = kTwoPi;
    rep.terms.push_back(
        {Solution::w_minus, coeff_minus, dominance_of(Solution::w_minus, ph_z - kTwoPi)});
  }
  return rep;
}

Complex ai_asymptotic(Complex z, AsymptoticOrder order) {
  const double r = std::abs(z);
  if (r == 0.0) throw DomainError(kModule, Fault::singularity, "branch point at z = 0");
  const double ph = phase_0_2pi(z);
  const SectorRepresentation rep = sector_of(ph);
  const double phb = branch_for_sector(ph);
  Complex total = 0.0;
  for (const auto& term : rep.terms) {
    const Sign s = term.solution == Solution::w_minus ? Sign::minus : Sign::plus;
    total += term.coefficient * wkb_approximant_on_branch(r, phb, s) *
             corrective_series_on_branch(r, phb, s, order);
  }
  return total;
}

Complex ai_unswitched(Complex z, AsymptoticOrder order) {
  const double r = std::abs(z);
  const double ph = phase_0_2pi(z);
  return kInvTwoSqrtPi * wkb_approximant_on_branch(r, ph, Sign::minus) *
         corrective_series_on_branch(r, ph, Sign::minus, order);
}

double first_omitted_term(Complex z, AsymptoticOrder order) {
  const auto& c = asymptotic_coefficients();
  const int n = order.n_terms();
  return c[n] / std::pow(std::abs(zeta_on_branch(std::abs(z), 0.0)), n);
}

}  // namespace tir::airy
