#include "tir/kernels.hpp"

namespace tir::kernels {

void helmholtz_stencil_scalar(const StencilArgs& a) {
  const int r = kStencilRadius;
  const long nx = a.nx;
  for (int j = r; j < a.ny - r; ++j) {
    for (int i = r; i < a.nx - r; ++i) {
      const long c = j * nx + i;
      double lre = (kD2[0] * a.inv_dx2 + kD2[0] * a.inv_dy2) * a.re[c];
      double lim = (kD2[0] * a.inv_dx2 + kD2[0] * a.inv_dy2) * a.im[c];
      for (int s = 1; s <= r; ++s) {
        const double wx = kD2[s] * a.inv_dx2, wy = kD2[s] * a.inv_dy2;
        lre += wx * (a.re[c - s] + a.re[c + s]) + wy * (a.re[c - s * nx] + a.re[c + s * nx]);
        lim += wx * (a.im[c - s] + a.im[c + s]) + wy * (a.im[c - s * nx] + a.im[c + s * nx]);
      }
      a.out_re[c] = lre + a.k2n2 * a.re[c];
      a.out_im[c] = lim + a.k2n2 * a.im[c];
    }
  }
}

}  // namespace tir::kernels
