#include "tir/kernels.hpp"

namespace tir::kernels {

Isa detected_isa() {
  static const Isa isa = [] {
#if defined(TIR_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::avx2;
#endif
    return Isa::scalar;
  }();
  return isa;
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void helmholtz_stencil(const StencilArgs& a) { helmholtz_stencil(a, detected_isa()); }

void helmholtz_stencil(const StencilArgs& a, Isa force) {
#if defined(TIR_HAVE_AVX2)
  if (force == Isa::avx2 && detected_isa() == Isa::avx2) {
    helmholtz_stencil_avx2(a);
    return;
  }
#endif
  (void)force;
  helmholtz_stencil_scalar(a);
}

}  // namespace tir::kernels
