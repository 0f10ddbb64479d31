#include "doctest.h"
#include "test_support.hpp"
#include "tir/field.hpp"

using namespace tir;
using namespace tir::field;
using tir::test::throws_fault;

TEST_SUITE("field") {
  TEST_CASE("reflection phase") {
    const auto p = reflection_phase(MediumConfig(1.5, kPi / 3, 1.0));
    CHECK(p.delta == doctest::Approx(-1.67096374795646).epsilon(1e-13));
    CHECK(std::abs(p.delta - p.delta_ratio_form) < 1e-12);
    CHECK(throws_fault([] { reflection_phase(MediumConfig(1.5, 0.3, 1.0)); }, Fault::subcritical));
  }

  TEST_CASE("illuminated field is incident plus phased reflection") {
    const MediumConfig cfg(1.5, kPi / 3, 20.0);
    const auto f = WavefrontProfile::gaussian(0.0, 0.5);
    const auto t = illuminated_terms(cfg, WavefrontProfile::constant(1.0), 1.0, 0.1, 0.05);
    CHECK(std::abs(t.incident) == doctest::Approx(std::abs(t.reflected)).epsilon(1e-14));
    CHECK(illuminated_field(cfg, WavefrontProfile::constant(1.0), 1.0, 0.1, 0.05) == t.total());
    const auto g = illuminated_terms(MediumConfig(1.5, kPi / 2 - 1e-8, 20.0), f, 1.0, 0.1, 0.05);
    CHECK(g.reflected == Complex(0.0));
    CHECK(std::abs(g.incident) > 0.0);
  }

  TEST_CASE("evanescent decay") {
    const MediumConfig cfg(1.5, kPi / 3, 50.0);
    const auto one = WavefrontProfile::constant(1.0);
    const double a = std::abs(shadow_field(cfg, one, 1.0, 0.0, -0.1));
    const double b = std::abs(shadow_field(cfg, one, 1.0, 0.0, -0.2));
    CHECK(std::log(a / b) / 0.1 == doctest::Approx(50.0 * cfg.kappa()).epsilon(1e-12));
  }

  TEST_CASE("matching constant cancels") {
    const MediumConfig cfg(1.5, 1.2, 30.0);
    const auto f = WavefrontProfile::gaussian(0.0, 0.4);
    const Complex a = shadow_field(cfg, f, 1.0, 0.2, -0.05);
    for (Complex C : {Complex(0.0), Complex(1.0, 2.0), Complex(-7.0, 0.5)}) {
      CHECK(std::abs(shadow_field_split(cfg, f, 1.0, C, 0.2, -0.05) - a) < 1e-12 * (1 + std::abs(a)));
    }
  }

  TEST_CASE("boundary matching is first order in epsilon") {
    const MediumConfig cfg(1.5, kPi / 3, 100.0);
    const auto f = WavefrontProfile::gaussian(0.0, 0.3);
    const std::vector<double> xs{-0.2, 0.0, 0.15};
    const auto a = boundary_match(cfg, f, 10.0, xs, 1e-3);
    const auto b = boundary_match(cfg, f, 10.0, xs, 1e-4);
    CHECK(a.max_value_mismatch / b.max_value_mismatch == doctest::Approx(10.0).epsilon(0.05));
    CHECK(b.max_identity_residual < 1e-12);
    CHECK(b.max_split_residual < 1e-10);
  }

  TEST_CASE("grid synthesis") {
    const MediumConfig cfg(1.5, kPi / 3, 10.0);
    const auto f = WavefrontProfile::gaussian(0.0, 0.5);
    const GridSpec spec{-1.0, 1.0, 11, -0.55, 0.45, 5};
    const auto g = synthesize(cfg, f, 1.0, spec);
    REQUIRE(g.values.size() == 55u);
    CHECK(g.regions.front() == Region::shadow);
    CHECK(g.regions.back() == Region::illuminated);
    CHECK(g.at(3, 4) == illuminated_field(cfg, f, 1.0, spec.x(3), spec.y(4)));
    CHECK(throws_fault([&] { synthesize(cfg, f, 1.0, GridSpec{-1, 1, 3, -1, 1, 3}); }, Fault::invalid_argument));
    CHECK(throws_fault([&] { synthesize(MediumConfig(1.5, 0.3, 10.0), f, 1.0, spec); }, Fault::subcritical));
  }

  TEST_CASE("Helmholtz residual guards") {
    const MediumConfig cfg(1.5, kPi / 3, 100.0);
    const auto f = WavefrontProfile::gaussian(0.0, 0.3);
    const auto coarse = synthesize(cfg, f, 1.0, GridSpec{-0.5, 0.5, 20, 0.1, 0.6, 20});
    CHECK(throws_fault([&] { helmholtz_residual(coarse); }, Fault::resolution));
    const double l = kTwoPi / (100.0 * 1.5);
    const auto mixed = synthesize(cfg, f, 1.0, GridSpec{-0.05, 0.05, 41, -0.05 - l / 40, 0.05, 41});
    CHECK(throws_fault([&] { helmholtz_residual(mixed); }, Fault::region_straddling));
    const auto fine = synthesize(cfg, f, 1.0, GridSpec{-0.1, 0.1, 61, 0.4, 0.6, 61});
    // leading-order field: residual is the envelope curvature over k^2
    CHECK(helmholtz_residual(fine) < 0.3);
  }

  TEST_CASE("loglog slope") {
    CHECK(loglog_slope({1, 10, 100}, {3, 0.3, 0.03}) == doctest::Approx(-1.0));
  }
}
