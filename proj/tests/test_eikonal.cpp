#include "doctest.h"
#include "test_support.hpp"
#include "tir/eikonal.hpp"

using namespace tir;
using namespace tir::eikonal;
using tir::test::throws_fault;

TEST_SUITE("eikonal") {
  TEST_CASE("medium configuration") {
    const MediumConfig cfg(1.5, kPi / 3, 10.0);
    CHECK(cfg.theta_crit() == doctest::Approx(std::asin(1.0 / 1.5)).epsilon(1e-15));
    CHECK(cfg.kappa() == doctest::Approx(std::sqrt(2.25 * 0.75 - 1.0)).epsilon(1e-15));
    CHECK(cfg.supercritical());
    CHECK(MediumConfig(2.0, kPi / 6, 1.0).critical());
    CHECK(MediumConfig(1.5, kPi / 2, 1.0).grazing());
    CHECK_THROWS_AS(MediumConfig(1.0, 0.5, 1.0), ConfigError);
    CHECK_THROWS_AS(MediumConfig(1.5, 0.0, 1.0), ConfigError);
    CHECK_THROWS_AS(MediumConfig(1.5, 1.6, 1.0), ConfigError);
    CHECK_THROWS_AS(MediumConfig(1.5, 1.0, -1.0), ConfigError);
  }

  TEST_CASE("phases are the plane-wave phases") {
    const MediumConfig cfg(1.5, 1.1, 1.0);
    const double s = std::sin(1.1), c = std::cos(1.1);
    auto [pp, pm] = phase(cfg, 0.4, 0.7);
    CHECK(pp.real() == doctest::Approx(1.5 * (0.4 * s + 0.7 * c)).epsilon(1e-14));
    CHECK(pm.real() == doctest::Approx(1.5 * (0.4 * s - 0.7 * c)).epsilon(1e-14));
    auto [sp, sm] = phase(cfg, 0.4, -0.7);
    CHECK(sp.imag() == doctest::Approx(-0.7 * cfg.kappa()).epsilon(1e-14));
    CHECK(sm == std::conj(sp));
    CHECK(phase_pair(cfg, 0.0, 0.0).region == Region::boundary);
  }

  TEST_CASE("closed-form gradients match finite differences") {
    const MediumConfig cfg(2.4, 0.9, 1.0);
    for (double y : {0.3, 2.0, -0.3, -2.0}) {
      CAPTURE(y);
      const auto a = gradient_closed_form(cfg, 0.2, y), b = gradient_numerical(cfg, 0.2, y);
      CHECK(a.u_x == doctest::Approx(b.u_x).epsilon(1e-8));
      CHECK(std::abs(a.u_y - b.u_y) < 1e-8);
      CHECK(std::abs(a.v_x - b.v_x) < 1e-8);
      CHECK(a.v_y == doctest::Approx(b.v_y).epsilon(1e-7));
    }
    CHECK(throws_fault([&] { gradient_closed_form(cfg, 0.0, 0.0); }, Fault::singularity));
    CHECK(throws_fault([&] { gradient_numerical(cfg, 0.0, 1e-8); }, Fault::region_straddling));
  }

  TEST_CASE("classification") {
    const MediumConfig cfg(1.5, 1.2, 1.0);
    CHECK(classify_point(cfg, 0.0, 1.0) == RegionType::hyperbolic);
    CHECK(classify_point(cfg, 0.0, -1.0) == RegionType::elliptic);
    CHECK(classify_point(cfg, 0.0, 0.0) == RegionType::parabolic);
    CHECK(throws_fault([] { classify(1.0, 0.0); }, Fault::degenerate_jacobian));
    CHECK(throws_fault([] { v_field(MediumConfig(1.5, 0.3, 1.0), -1.0); }, Fault::subcritical));
  }

  TEST_CASE("characteristics follow the rays") {
    const MediumConfig cfg(1.5, 1.0, 1.0);
    const auto g = gradient_closed_form(cfg, 0.0, 0.5);
    auto [a, b] = characteristic_slopes(g, v_field(cfg, 0.5));
    CHECK(std::abs(a) == doctest::Approx(std::tan(1.0)).epsilon(1e-13));
    CHECK(a == doctest::Approx(-b).epsilon(1e-13));
    CHECK(throws_fault([&] { characteristic_slopes(g, -1.0); }, Fault::elliptic_input));
  }

  TEST_CASE("shadow Beltrami and Backlund relations") {
    const MediumConfig cfg(1.5, 1.2, 1.0);
    for (double y : {-0.01, -0.5, -3.0}) {
      const auto g = gradient_closed_form(cfg, 0.1, y);
      const double v = v_field(cfg, y);
      const auto r = beltrami_check(g, v);
      CHECK(std::abs(r.residual_a) + std::abs(r.residual_b) < 1e-12 * (1 + std::abs(g.u_x)));
      CHECK(r.bracket_ok);
      CHECK(r.inequality_ok);
      CHECK(backlund_residual(g, v) < 1e-12);
      auto [ray, ortho] = eikonal_residual(g, v, 1.0);
      CHECK(std::abs(ray) < 1e-12);
      CHECK(ortho == 0.0);
    }
    const auto g = gradient_closed_form(cfg, 0.1, 1.0);
    CHECK(throws_fault([&] { beltrami_check(g, 1.0); }, Fault::out_of_region));
  }
}
