// Built with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include "tir/kernels.hpp"

namespace tir::kernels {

namespace {

inline __m256d load(const double* p) { return _mm256_loadu_pd(p); }

// One plane, four consecutive interior columns starting at c.
inline __m256d lap4(const double* p, long c, long nx, const __m256d* wx, const __m256d* wy,
                    __m256d w0, __m256d k2n2) {
  const __m256d centre = load(p + c);
  __m256d acc = _mm256_mul_pd(_mm256_add_pd(w0, k2n2), centre);
  for (int s = 1; s <= kStencilRadius; ++s) {
    const __m256d sx = _mm256_add_pd(load(p + c - s), load(p + c + s));
    const __m256d sy = _mm256_add_pd(load(p + c - s * nx), load(p + c + s * nx));
    acc = _mm256_fmadd_pd(wx[s], sx, acc);
    acc = _mm256_fmadd_pd(wy[s], sy, acc);
  }
  return acc;
}

}  // namespace

void helmholtz_stencil_avx2(const StencilArgs& a) {
  const int r = kStencilRadius;
  const long nx = a.nx;
  __m256d wx[kStencilRadius + 1], wy[kStencilRadius + 1];
  for (int s = 0; s <= r; ++s) {
    wx[s] = _mm256_set1_pd(kD2[s] * a.inv_dx2);
    wy[s] = _mm256_set1_pd(kD2[s] * a.inv_dy2);
  }
  const __m256d w0 = _mm256_set1_pd(kD2[0] * a.inv_dx2 + kD2[0] * a.inv_dy2);
  const __m256d k2n2 = _mm256_set1_pd(a.k2n2);
  for (int j = r; j < a.ny - r; ++j) {
    int i = r;
    for (; i + 4 <= a.nx - r; i += 4) {
      const long c = j * nx + i;
      _mm256_storeu_pd(a.out_re + c, lap4(a.re, c, nx, wx, wy, w0, k2n2));
      _mm256_storeu_pd(a.out_im + c, lap4(a.im, c, nx, wx, wy, w0, k2n2));
    }
    // scalar tail, same operation order as the vector lanes
    for (; i < a.nx - r; ++i) {
      const long c = j * nx + i;
      for (int plane = 0; plane < 2; ++plane) {
        const double* p = plane == 0 ? a.re : a.im;
        double acc = (kD2[0] * a.inv_dx2 + kD2[0] * a.inv_dy2 + a.k2n2) * p[c];
        for (int s = 1; s <= r; ++s) {
          acc = __builtin_fma(kD2[s] * a.inv_dx2, p[c - s] + p[c + s], acc);
          acc = __builtin_fma(kD2[s] * a.inv_dy2, p[c - s * nx] + p[c + s * nx], acc);
        }
        (plane == 0 ? a.out_re : a.out_im)[c] = acc;
      }
    }
  }
}

}  // namespace tir::kernels
