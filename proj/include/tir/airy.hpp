#pragma once

// Airy function engine: accurate Ai/Ai' on |z| <= 30 and the sector-aware
// asymptotic representation of Ai with Stokes switching.
//
// Phase convention: ph z in [0, 2*pi). The Stokes rays of the w- expansion of
// Ai sit at 2*pi/3 and 4*pi/3; anti-Stokes rays at pi/3, pi, 5*pi/3.

#include <vector>

#include "tir/common.hpp"

namespace tir::airy {

enum class Sign { minus = -1, plus = +1 };

/// Truncation order of the corrective series W+-; at least one term.
class AsymptoticOrder {
 public:
  explicit AsymptoticOrder(int n_terms);
  int n_terms() const noexcept { return n_; }

 private:
  int n_;
};

enum class Solution { w_minus, w_plus };
enum class Dominance { dominant, subdominant, comparable };

struct SectorTerm {
  Solution solution;
  Complex coefficient;
  Dominance dominance;
};

struct SectorRepresentation {
  double lower = 0.0;  // open phase interval (lower, upper)
  double upper = 0.0;
  std::vector<SectorTerm> terms;
};

inline constexpr double kStokesRay1 = 2.0 * kPi / 3.0;
inline constexpr double kStokesRay2 = 4.0 * kPi / 3.0;
/// Accuracy envelope of ai_exact / ai_prime_exact.
inline constexpr double kEnvelopeRadius = 30.0;

// --- exact evaluation --------------------------------------------------------

Complex ai_exact(Complex z);
Complex ai_prime_exact(Complex z);

/// Bi and Bi' from the Maclaurin series only; meant for |z| <= 8 where the
/// series is well conditioned for the dominant solution.
Complex bi_series(Complex z);
Complex bi_prime_series(Complex z);

/// Maclaurin evaluation of Ai and Ai' (no path switching). `condition` receives
/// sum|terms| / |Ai| when non-null.
Complex ai_series(Complex z, double* condition = nullptr);
Complex ai_prime_series(Complex z, double* condition = nullptr);

// --- asymptotic machinery ------------------------------------------------------

/// c_m of the classical expansion, c_0 = 1, c_{m+1} = c_m (6m+5)(6m+1) / (72(m+1)).
const std::vector<double>& asymptotic_coefficients();

/// zeta = (2/3) z^(3/2) on the branch with the given phase of z.
Complex zeta_on_branch(double modulus, double phase);

/// z^(-1/4) exp(+-(2/3) z^(3/2)) with ph z in [0, 2*pi).
Complex wkb_approximant(Complex z, Sign sign);
/// Same, with an explicit phase for z (any real value; selects the sheet).
Complex wkb_approximant_on_branch(double modulus, double phase, Sign sign);

/// sum_{m < order} (+-1)^m W_m(z), W_m = c_m / zeta^m, ph z in [0, 2*pi).
/// Throws Fault::divergence when term `order` is not smaller than term `order-1`.
Complex corrective_series(Complex z, Sign sign, AsymptoticOrder order);
Complex corrective_series_on_branch(double modulus, double phase, Sign sign, AsymptoticOrder order);

/// Term list of Ai(z) = sum coefficient * w(z) in the sector containing ph_z.
/// Throws Fault::on_stokes_ray at 2*pi/3 and 4*pi/3 (within 1e-12 rad).
SectorRepresentation sector_of(double ph_z);

/// Sector-correct truncated asymptotic value of Ai(z).
Complex ai_asymptotic(Complex z, AsymptoticOrder order);

/// The w- representation continued on the ph in [0, 2*pi) branch without any
/// switching. Used to show the Stokes jump; not an approximation of Ai past 2*pi/3.
Complex ai_unswitched(Complex z, AsymptoticOrder order);

/// Magnitude of the first omitted term relative to the leading term, for the
/// largest-modulus term in the sector representation.
double first_omitted_term(Complex z, AsymptoticOrder order);

}  // namespace tir::airy
