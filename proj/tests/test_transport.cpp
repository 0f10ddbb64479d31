#include "doctest.h"
#include "test_support.hpp"
#include "tir/transport.hpp"

using namespace tir;
using namespace tir::transport;
using tir::test::throws_fault;

namespace {
double size(const TransportResidual& r) { return std::abs(r.first) + std::abs(r.second); }
}  // namespace

TEST_SUITE("transport") {
  TEST_CASE("coefficients") {
    const MediumConfig cfg(1.5, kPi / 3, 1.0);
    const auto c = coefficients(cfg);
    CHECK(c.alpha_I * c.beta_I == doctest::Approx(3.0).epsilon(1e-14));  // tan^2
    CHECK(c.lambda_plus == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    REQUIRE(c.alpha_S);
    CHECK(*c.alpha_S > 0.0);
    CHECK(*c.beta_S < 0.0);
    CHECK(shadow_shift(c) * shadow_shift(c) ==
          doctest::Approx(2.25 * 0.75 / (2.25 * 0.75 - 1.0)).epsilon(1e-13));
    CHECK_FALSE(coefficients(MediumConfig(1.5, 0.3, 1.0)).alpha_S);
    CHECK(throws_fault([] { coefficients(MediumConfig(1.5, kPi / 2, 1.0)); }, Fault::grazing));
    CHECK(throws_fault([] { coefficients(MediumConfig(2.0, kPi / 6, 1.0)); }, Fault::critical_incidence));
    CHECK(throws_fault([] { shadow_shift(coefficients(MediumConfig(1.5, 0.3, 1.0))); }, Fault::critical_incidence));
  }

  TEST_CASE("characteristic lines") {
    const auto c = coefficients(MediumConfig(1.5, 1.0, 1.0));
    auto [p, m] = characteristic_curves(c, 0.5);
    CHECK(p.x_at(1.0) == doctest::Approx(0.5 - std::tan(1.0)));
    CHECK(m.x_at(1.0) == doctest::Approx(0.5 + std::tan(1.0)));
    const auto d = p.direction();
    CHECK(std::hypot(d[0], d[1]) == doctest::Approx(1.0));
  }

  TEST_CASE("diagonal form reassembles the amplitudes") {
    const MediumConfig cfg(1.5, 1.0, 1.0);
    const auto c = coefficients(cfg);
    const auto f1 = WavefrontProfile::gaussian(0.1, 0.8), f2 = WavefrontProfile::gaussian(-0.3, 0.5);
    const auto a = illuminated_amplitudes(c, f1, f2, 1.0, 0.2, 0.6);
    const auto [g, h] = diagonal_form(c, f1, f2, 1.0, 0.2, 0.6).reassemble();
    CHECK(std::abs(g - a.g0) < 1e-14);
    CHECK(std::abs(h - a.h0) < 1e-14);
    CHECK(throws_fault([&] { illuminated_amplitudes(c, f1, f2, 1.0, 0.2, -0.6); }, Fault::out_of_region));
  }

  TEST_CASE("residuals vanish at second order in both forms") {
    const MediumConfig cfg(1.5, kPi / 3, 1.0);
    const auto c = coefficients(cfg);
    const auto f1 = WavefrontProfile::gaussian(0.3, 1.0), f2 = WavefrontProfile::gaussian(-0.2, 0.7);
    AmplitudeField ill = [&](double x, double y) { return illuminated_amplitudes(c, f1, f2, cfg.theta_i(), x, y); };
    AmplitudeField sh = [&](double x, double y) { return shadow_amplitudes(c, f1, f2, x, y); };
    for (auto form : {TransportForm::reduced, TransportForm::general}) {
      const double i1 = size(transport_residual(ill, cfg, c, RegionType::hyperbolic, 0.1, 0.7, 1e-2, form));
      const double i2 = size(transport_residual(ill, cfg, c, RegionType::hyperbolic, 0.1, 0.7, 1e-3, form));
      const double s1 = size(transport_residual(sh, cfg, c, RegionType::elliptic, 0.1, -0.4, 1e-2, form));
      const double s2 = size(transport_residual(sh, cfg, c, RegionType::elliptic, 0.1, -0.4, 1e-3, form));
      CHECK(i1 / i2 == doctest::Approx(100.0).epsilon(0.1));
      CHECK(s1 / s2 == doctest::Approx(100.0).epsilon(0.1));
    }
    CHECK(throws_fault([&] { transport_residual(ill, cfg, c, RegionType::hyperbolic, 0.0, 1e-3, 1e-2); },
                       Fault::region_straddling));
  }

  TEST_CASE("shadow profiles honour the analytic strip") {
    const auto c = coefficients(MediumConfig(1.5, kPi / 3, 1.0));
    const auto bump = WavefrontProfile::raised_cosine(0.0, 1.0, 0.5);
    const auto one = WavefrontProfile::constant(1.0);
    CHECK_NOTHROW(shadow_amplitudes(c, bump, one, 0.0, -0.1));
    CHECK(throws_fault([&] { shadow_amplitudes(c, bump, one, 0.0, -5.0); }, Fault::strip_violation));
  }
}
