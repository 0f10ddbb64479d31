#pragma once

// Borel sums Lambda_n, their monodromy, and the late-term / resummed-tail
// machinery for the Airy corrective series.
//
//   Lambda_n(z) = (1/n!) int_0^inf t^n e^{-t} / (1 + t/z) dt
//
// The pole of the integrand sits at t = -z, so the principal value is
// undefined on ph z = pi. Complex powers of -z use ph(-z) = ph(z) - pi.

#include <vector>

#include "tir/common.hpp"

namespace tir::borel {

struct BorelKernel {
  int n = 0;
  Complex z;
};

/// Principal-path value of Lambda_n(z), 1e-12 absolute.
/// Throws Fault::pole_on_path for z on the negative real axis.
Complex lambda_n(const BorelKernel& kernel);

/// One-sided value with the integration ray tilted to ph t = side * 0.5.
/// Defined on the negative real axis as well; side = +1 is the limit reached
/// from ph z < pi, side = -1 the limit from ph z > pi (i.e. ph z -> -pi).
Complex lambda_n_lateral(const BorelKernel& kernel, int side);

/// Additive jump so that Lambda_n(z e^{turns 2 pi i}) = Lambda_n(z) + jump.
Complex monodromy_jump(const BorelKernel& kernel, int turns);

/// Lambda_n continued through `turns` full turns (+-1) about the origin.
Complex lambda_n_continued(const BorelKernel& kernel, int turns);

struct LateTermModel {
  Complex F;                      // (4/3) z^{3/2}
  int s_max = 3;                  // inner terms used: s = 0 .. s_max-1
  std::vector<Complex> W_early;   // W_s for s = 0 .. at least s_max-1

  /// W_s = c_s / zeta^s for the w- series of Ai at z (ph z in [0, 2 pi)).
  /// Stores one spare early term for the stabilization check.
  static LateTermModel for_airy(Complex z, int s_max = 3);
};

inline constexpr int kLateTermMin = 10;

/// W_m = (1 / (2 pi F^m)) sum_s (-F)^s (m-s-1)! W_s.
/// Throws Fault::under_range for m < kLateTermMin.
Complex late_term(const LateTermModel& model, int m);

/// Borel-resummed tail sum_{m >= n} (-1)^m W_m.
/// Throws Fault::phase_domain when |ph F| >= pi. When a spare early term is
/// available the result must move by less than 1e-8 on adding it, otherwise
/// ToleranceError.
Complex resum_tail(const LateTermModel& model, int n);

/// Same sum with every Lambda evaluated laterally (see lambda_n_lateral);
/// usable on the Stokes ray ph F = pi.
Complex resum_tail_lateral(const LateTermModel& model, int n, int side);

}  // namespace tir::borel
