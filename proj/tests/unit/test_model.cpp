#include <doctest.h>

#include <cmath>
#include <cstring>

#include "monopole_spectra/model.hpp"
#include "test_helpers.hpp"

using namespace monopole;
using test_helpers::params;

TEST_CASE("flat-space couplings, alpha = 1") {
  const auto c = derive_couplings(params(1.0, 0.5, 1.0), 1);
  CHECK(c.S.value == 0.0);
  CHECK(c.K == 0.0);
  CHECK(c.zeta == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(c.lambda_sq == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(c.lambdaK_sq == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(c.j_sq == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(c.ell == doctest::Approx(0.5 * (1.0 + std::sqrt(11.0))).epsilon(1e-14));
  CHECK(!c.eta_sq.has_value());
}

TEST_CASE("zeta cancels at the coupling threshold K = 2AD") {
  // alpha = 0.5 gives K = S(0.5)/2; choose D so that 2AD matches it.
  const double K = 0.5 * test_helpers::kS_half;
  const auto c = derive_couplings(params(0.5, 1.0, 0.5 * K), 0);
  CHECK(std::abs(c.zeta) < 1e-10);
}

TEST_CASE("monopole couplings at alpha = 0.5 match the pinned constant") {
  const auto c = derive_couplings(params(0.5, 0.5, 1.0), 1, 1e-12);
  CHECK(std::abs(c.zeta - test_helpers::kZeta_half) < 1e-9);
  CHECK(c.lambda_sq == doctest::Approx(8.0).epsilon(1e-14));   // 2 / 0.25
  CHECK(c.lambdaK_sq == doctest::Approx(2.0).epsilon(1e-14));  // 0.5 / 0.25
}

TEST_CASE("eta_sq present exactly when delta > 0") {
  const auto unscreened = derive_couplings(params(0.8, 0.5, 1.0), 1);
  CHECK(!unscreened.eta_sq.has_value());
  const auto screened = derive_couplings(params(0.8, 0.5, 1.0, 1e-3), 1);
  REQUIRE(screened.eta_sq.has_value());
  CHECK(*screened.eta_sq == doctest::Approx(screened.zeta / 1e-3).epsilon(1e-14));
}

TEST_CASE("the two exponent routes coincide: ell = d") {
  for (double alpha : {0.3, 0.55, 0.8, 1.0}) {
    for (int l : {0, 1, 2, 5}) {
      const auto c = derive_couplings(params(alpha, 0.5, 1.0), l);
      CHECK(std::abs(c.ell - c.d) < 1e-12);
      CHECK(c.d > 1.0);
    }
  }
}

TEST_CASE("derivation is a pure function: repeated calls bit-identical") {
  const auto a = derive_couplings(params(0.7, 2.0, 4.0, 0.01), 2);
  const auto b = derive_couplings(params(0.7, 2.0, 4.0, 0.01), 2);
  CHECK(std::memcmp(&a.K, &b.K, sizeof(double)) == 0);
  CHECK(std::memcmp(&a.zeta, &b.zeta, sizeof(double)) == 0);
  CHECK(std::memcmp(&a.ell, &b.ell, sizeof(double)) == 0);
  CHECK(a.S.value == b.S.value);
  CHECK(*a.eta_sq == *b.eta_sq);
}

TEST_CASE("lambda and lambda_K are invariant under hbar -> c hbar, M -> c^2 M") {
  const auto base = derive_couplings(params(0.6, 0.5, 1.0), 2);
  auto scaled_params = params(0.6, 0.5, 1.0);
  scaled_params.constants.hbar *= 3.0;
  scaled_params.constants.mass *= 9.0;
  const auto scaled = derive_couplings(scaled_params, 2);
  CHECK(test_helpers::close_rel(base.lambda_sq, scaled.lambda_sq, 1e-15));
  CHECK(test_helpers::close_rel(base.lambdaK_sq, scaled.lambdaK_sq, 1e-15));
}

TEST_CASE("parameter invariants are enforced") {
  CHECK_THROWS_AS(derive_couplings(params(1.2, 0.5, 1.0), 1), InvalidParameterError);
  CHECK_THROWS_AS(derive_couplings(params(0.0, 0.5, 1.0), 1), InvalidParameterError);
  CHECK_THROWS_AS(derive_couplings(params(0.5, -0.5, 1.0), 1), InvalidParameterError);
  CHECK_THROWS_AS(derive_couplings(params(0.5, 0.5, 0.0), 1), InvalidParameterError);
  CHECK_THROWS_AS(derive_couplings(params(0.5, 0.5, 1.0, -0.1), 1), InvalidParameterError);
  CHECK_THROWS_AS(derive_couplings(params(0.5, 0.5, 1.0), -1), InvalidParameterError);

  auto p = params(0.5, 0.5, 1.0);
  p.constants.hbar = 0.0;
  CHECK_THROWS_AS(p.validate(), InvalidParameterError);
  p = params(0.5, 0.5, 1.0);
  p.constants.mass = -1.0;
  CHECK_THROWS_AS(p.validate(), InvalidParameterError);
  p = params(0.5, 0.5, 1.0);
  p.constants.charge = 0.0;
  CHECK_THROWS_AS(p.validate(), InvalidParameterError);
}
