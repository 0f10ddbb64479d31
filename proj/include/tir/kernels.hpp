#pragma once

// Helmholtz residual stencil over split real/imaginary planes.
//
// out = lap(psi) + k2n2 * psi on interior points (kStencilRadius cells away
// from every edge), with the tenth-order central second difference in x and
// y. Border cells of `out_*` are left untouched. Planes are row-major with
// `nx` columns.

#include <string_view>

namespace tir::kernels {

inline constexpr int kStencilRadius = 5;

// f'' weights for offsets 0..5
inline constexpr double kD2[6] = {-5269.0 / 1800.0, 5.0 / 3.0,     -5.0 / 21.0,
                                  5.0 / 126.0,      -5.0 / 1008.0, 1.0 / 3150.0};

struct StencilArgs {
  const double* re;
  const double* im;
  int nx;
  int ny;
  double inv_dx2;
  double inv_dy2;
  double k2n2;
  double* out_re;
  double* out_im;
};

void helmholtz_stencil_scalar(const StencilArgs& a);
void helmholtz_stencil_avx2(const StencilArgs& a);

enum class Isa { scalar, avx2 };

/// Best variant the running CPU supports (checked once).
Isa detected_isa();
std::string_view isa_name(Isa isa);

/// Runs the detected variant, or `force` when given and supported.
void helmholtz_stencil(const StencilArgs& a);
void helmholtz_stencil(const StencilArgs& a, Isa force);

}  // namespace tir::kernels
