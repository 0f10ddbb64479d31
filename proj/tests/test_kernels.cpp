#include <random>
#include <vector>

#include "doctest.h"
#include "tir/kernels.hpp"

using namespace tir::kernels;

namespace {

struct Planes {
  int nx, ny;
  std::vector<double> re, im, out_re, out_im;
  Planes(int nx_, int ny_) : nx(nx_), ny(ny_), re(nx_ * ny_), im(nx_ * ny_), out_re(nx_ * ny_), out_im(nx_ * ny_) {}
  StencilArgs args(double k2n2) {
    return {re.data(), im.data(), nx, ny, 4.0, 9.0, k2n2, out_re.data(), out_im.data()};
  }
};

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("stencil is exact on quadratics") {
    Planes p(23, 17);
    for (int j = 0; j < p.ny; ++j)
      for (int i = 0; i < p.nx; ++i) {
        const double x = i * 0.5, y = j / 3.0;  // spacing matches inv_dx2 = 4, inv_dy2 = 9
        p.re[j * p.nx + i] = x * x + 2 * y * y;
        p.im[j * p.nx + i] = -x * y;
      }
    helmholtz_stencil(p.args(0.0), Isa::scalar);
    for (int j = kStencilRadius; j < p.ny - kStencilRadius; ++j)
      for (int i = kStencilRadius; i < p.nx - kStencilRadius; ++i) {
        CHECK(p.out_re[j * p.nx + i] == doctest::Approx(6.0).epsilon(1e-11));
        CHECK(std::abs(p.out_im[j * p.nx + i]) < 1e-10);
      }
  }

  TEST_CASE("AVX2 variant matches the scalar variant") {
    if (detected_isa() != Isa::avx2) {
      MESSAGE("AVX2 not available; equivalence test skipped");
      return;
    }
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int nx : {11, 12, 13, 14, 31, 64}) {
      Planes a(nx, 19), b(nx, 19);
      for (std::size_t i = 0; i < a.re.size(); ++i) {
        a.re[i] = b.re[i] = U(rng);
        a.im[i] = b.im[i] = U(rng);
      }
      helmholtz_stencil(a.args(123.4), Isa::scalar);
      helmholtz_stencil(b.args(123.4), Isa::avx2);
      double worst = 0.0, scale = 0.0;
      for (std::size_t i = 0; i < a.re.size(); ++i) {
        worst = std::max({worst, std::abs(a.out_re[i] - b.out_re[i]), std::abs(a.out_im[i] - b.out_im[i])});
        scale = std::max({scale, std::abs(a.out_re[i]), std::abs(a.out_im[i])});
      }
      CAPTURE(nx);
      CHECK(worst <= 1e-12 * scale);
    }
  }

  TEST_CASE("isa names") {
    CHECK(isa_name(Isa::scalar) == "scalar");
    CHECK(isa_name(Isa::avx2) == "avx2");
  }
}
