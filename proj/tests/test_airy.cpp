#include "doctest.h"
#include "test_support.hpp"
#include "tir/airy.hpp"
#include "tir/verify/oracles.hpp"

using namespace tir;
using tir::test::rel_err;
using tir::test::throws_fault;

TEST_SUITE("airy") {
  // 30-digit reference values
  TEST_CASE("ai_exact reference values") {
    struct Row {
      Complex z, ai, aip;
    };
    const Row rows[] = {
        {0.0, 0.355028053887817239, -0.258819403792806798},
        {1.0, 0.135292416312881416, -0.159147441296793213},
        {-2.0, 0.227407428201685576, 0.618259020741691041},
        {5.0, 1.08344428136074417e-4, -2.47413890868462476e-4},
        {-10.0, 0.0402412384864431907, 0.996265044132790056},
        {{8.0, -8.0}, {6.57693289644327046e-7, -9.31233137515166875e-6}, {9.79016404059459649e-6, 2.99217038353591828e-5}},
        {{3.0, 4.0}, {0.0145545466909446349, -0.0474352515154928361}, {-0.075209961195903029, 0.082364077155537795}},
        {{-6.0, 1.0}, {-1.86653058124493980, 0.955965483518478121}, {2.68299447892244819, 4.35548032408608225}},
    };
    for (const auto& r : rows) {
      CAPTURE(r.z);
      CHECK(rel_err(airy::ai_exact(r.z), r.ai) < 1e-12);
      CHECK(rel_err(airy::ai_prime_exact(r.z), r.aip) < 1e-12);
    }
  }

  TEST_CASE("Bi series at 1") {
    CHECK(rel_err(airy::bi_series(1.0), 1.20742359495287126) < 1e-14);
    CHECK(rel_err(airy::bi_prime_series(1.0), 0.932435933392775633) < 1e-14);
  }

  TEST_CASE("Wronskian Ai Bi' - Ai' Bi = 1/pi") {
    for (Complex z : {Complex(0.3, 0.2), Complex(-2.0, 1.0), Complex(3.0, -1.5)}) {
      const Complex w = airy::ai_exact(z) * airy::bi_prime_series(z) - airy::ai_prime_exact(z) * airy::bi_series(z);
      CHECK(std::abs(w - 1.0 / kPi) < 1e-12);
    }
  }

  TEST_CASE("quadrature oracle spot check") {
    for (Complex z : {Complex(2.0, 0.0), Complex(-4.0, 0.5), Complex(0.0, 7.0)}) {
      CHECK(rel_err(airy::ai_exact(z), verify::ai_quadrature(z).value) < 1e-11);
    }
  }

  TEST_CASE("coefficient table") {
    const auto& c = airy::asymptotic_coefficients();
    CHECK(c[0] == 1.0);
    CHECK(c[1] == doctest::Approx(5.0 / 72.0).epsilon(1e-15));
    CHECK(c[2] == doctest::Approx(385.0 / 10368.0).epsilon(1e-15));
  }

  TEST_CASE("sector table") {
    auto s1 = airy::sector_of(1.0);
    REQUIRE(s1.terms.size() == 1);
    CHECK(s1.terms[0].solution == airy::Solution::w_minus);
    auto s2 = airy::sector_of(kPi);
    REQUIRE(s2.terms.size() == 2);
    CHECK(std::abs(s2.terms[1].coefficient - Complex(0.0, 0.5 / std::sqrt(kPi))) < 1e-15);
    // on the negative real axis both exponentials have unit modulus
    CHECK(s2.terms[0].dominance == airy::Dominance::comparable);
    CHECK(throws_fault([] { airy::sector_of(airy::kStokesRay1); }, Fault::on_stokes_ray));
    CHECK(throws_fault([] { airy::sector_of(airy::kStokesRay2 + 1e-13); }, Fault::on_stokes_ray));
  }

  TEST_CASE("asymptotic accuracy improves with modulus") {
    const airy::AsymptoticOrder order(4);
    const double ph = 0.4;
    const double e8 = rel_err(airy::ai_asymptotic(std::polar(8.0, ph), order), airy::ai_exact(std::polar(8.0, ph)));
    const double e16 =
        rel_err(airy::ai_asymptotic(std::polar(16.0, ph), order), airy::ai_exact(std::polar(16.0, ph)));
    CHECK(e16 < e8);
    CHECK(airy::first_omitted_term(std::polar(8.0, ph), order) > 0.0);
  }

  TEST_CASE("faults") {
    CHECK(throws_fault([] { airy::AsymptoticOrder(0); }, Fault::invalid_argument));
    CHECK(throws_fault([] { airy::ai_exact(std::polar(200.0, 2.0)); }, Fault::envelope));
    CHECK(throws_fault([] { airy::wkb_approximant(0.0, airy::Sign::minus); }, Fault::singularity));
    CHECK(throws_fault([] { airy::corrective_series(0.3, airy::Sign::minus, airy::AsymptoticOrder(20)); },
                       Fault::divergence));
  }
}
