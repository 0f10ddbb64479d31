#include "doctest.h"
#include "test_support.hpp"
#include "tir/field.hpp"
#include "tir/goos.hpp"

using namespace tir;
using tir::test::throws_fault;

TEST_SUITE("goos") {
  TEST_CASE("derivative and shift at n = 1.5, theta = pi/3, k = 100") {
    const goos::MediumConfig cfg(1.5, kPi / 3, 100.0);
    CHECK(goos::delta_derivative(cfg) == doctest::Approx(-3.133397807).epsilon(1e-9));
    const auto s = goos::shift(cfg);
    CHECK(s.X_bar == doctest::Approx(-0.04177863743).epsilon(1e-9));
    CHECK(s.D / s.wavelength == doctest::Approx(-0.332464).epsilon(1e-5));
    CHECK(s.D == s.X_bar * std::cos(kPi / 3));
    CHECK(s.delta0 == doctest::Approx(3.75624).epsilon(1e-5));
  }

  TEST_CASE("faults") {
    CHECK(throws_fault([] { goos::delta_derivative(goos::MediumConfig(2.0, kPi / 6, 1.0)); }, Fault::divergence));
    CHECK(throws_fault([] { goos::delta_derivative(goos::MediumConfig(1.5, 0.3, 1.0)); }, Fault::subcritical));
    CHECK(throws_fault([] { goos::shift(goos::MediumConfig(1.5, kPi / 2, 1.0)); }, Fault::grazing));
  }

  TEST_CASE("linearized reflection agrees with the exact phase at the carrier") {
    // for a constant envelope the shifted wave is exactly e^{i delta} times the mirror wave
    const goos::MediumConfig cfg(1.5, 1.1, 40.0);
    const auto one = WavefrontProfile::constant(1.0);
    const auto exact = field::illuminated_terms(cfg, one, 1.0, 0.3, 0.2).reflected;
    CHECK(std::abs(goos::shifted_reflected(cfg, one, 1.0, 0.3, 0.2) - exact) < 1e-12 * std::abs(exact));
    CHECK(std::abs(goos::shifted_field(cfg, one, 1.0, 0.3, 0.2) - field::illuminated_field(cfg, one, 1.0, 0.3, 0.2)) <
          1e-12);
  }
}
