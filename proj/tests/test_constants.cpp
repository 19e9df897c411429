#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "logint/constants.hpp"
#include "logint/lifn.hpp"
#include "oracle_values.hpp"

using namespace logint;

namespace {
Real ten_pow(long e, long digits = Real::kDefaultDigits) { return pow(Real(10, digits), e); }
}  // namespace

TEST_CASE("euler_gamma reproduces the 1809 22-decimal string exactly") {
  ConstantResult g = euler_gamma(22);
  CHECK(g.method_tag == "euler-maclaurin");
  CHECK(g.value.to_string(22, /*truncate=*/true) == soldner_gamma_1809());
}

TEST_CASE("euler_gamma agrees with the frozen reference and with MPFR") {
  Real g = euler_gamma(60).value;
  CHECK(abs(g - Real::from_string(oracle::kGamma, 80)) < ten_pow(-60, 80));

  // cross-check against MPFR's independent algorithm at 80 digits
  Real m(80 + 8);
  mpfr_t tmp;
  mpfr_init2(tmp, 300);
  mpfr_const_euler(tmp, MPFR_RNDN);
  char* s = nullptr;
  mpfr_asprintf(&s, "%.85Rg", tmp);
  Real mref = Real::from_string(s, 88);
  mpfr_free_str(s);
  mpfr_clear(tmp);
  CHECK(abs(euler_gamma(80).value - mref) < ten_pow(-78, 88));
  (void)m;
}

TEST_CASE("Mascheroni's 1790 string is right through 19 decimals, wrong at the 20th") {
  std::string computed = euler_gamma(40).value.to_string(32, /*truncate=*/true);
  CHECK(first_divergent_decimal(computed, mascheroni_gamma_1790()) == 20);
  std::string prefix19(mascheroni_gamma_1790().substr(0, 2 + 19));
  CHECK(computed.substr(0, 2 + 19) == prefix19);
}

TEST_CASE("euler_gamma precision extension is prefix-consistent") {
  CHECK(euler_gamma(40).value.to_string(22, true) == euler_gamma(22).value.to_string(22, true));
}

TEST_CASE("euler_gamma rejects out-of-cap digit counts") {
  CHECK_THROWS_AS(euler_gamma(0), std::out_of_range);
  CHECK_THROWS_AS(euler_gamma(101), std::out_of_range);
}

TEST_CASE("harmonic_gamma_limit basics") {
  CHECK(harmonic_gamma_limit(1) == 1);
  Real gamma = euler_gamma_value(64);

  Real d4 = harmonic_gamma_limit(10000) - gamma;
  CHECK(d4 > 0);
  CHECK(d4 < ten_pow(-4));  // ~ 1/(2N)

  CHECK(abs(harmonic_gamma_limit(1000000) - gamma) < ten_pow(-6));
  CHECK_THROWS_AS(harmonic_gamma_limit(0), std::domain_error);
}

TEST_CASE("harmonic_gamma_limit converges monotonically from above") {
  Real gamma = euler_gamma_value(64);
  Real prev = harmonic_gamma_limit(100) - gamma;
  for (long n : {1000L, 10000L, 100000L}) {
    Real d = harmonic_gamma_limit(n) - gamma;
    CHECK(d > 0);
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("soldner_mu finds the root of li") {
  ConstantResult mu = soldner_mu(13);
  CHECK(mu.method_tag == "bisection+newton");
  CHECK(abs(mu.value - Real::from_string("1.4513692348833", 64)) < ten_pow(-13));

  // the printed 1809 value is right through 9 decimals and wrong at the 10th
  std::string computed = mu.value.to_string(10, /*truncate=*/true);
  CHECK(first_divergent_decimal(computed, soldner_mu_1809()) == 10);
  CHECK(computed.substr(0, 2 + 9) == std::string(soldner_mu_1809().substr(0, 2 + 9)));

  // root residual at higher request
  Real mu20 = soldner_mu(20).value;
  CHECK(abs(li(mu20)) < ten_pow(-22, mu20.digits()));

  // long reference
  CHECK(abs(soldner_mu(40).value - Real::from_string(oracle::kMu, 64)) < ten_pow(-40));

  CHECK_THROWS_AS(soldner_mu(0), std::out_of_range);
  CHECK_THROWS_AS(soldner_mu(51), std::out_of_range);
}

TEST_CASE("root residual tracks the digit request") {
  for (long digits : {8L, 13L, 26L}) {
    Real mu = soldner_mu(digits).value;
    CHECK(abs(li(mu)) < ten_pow(-(digits + 2), mu.digits()));
  }
}
