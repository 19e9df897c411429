#ifndef LOGINT_CONSTANTS_HPP
#define LOGINT_CONSTANTS_HPP

#include <string>
#include <string_view>

#include "logint/real.hpp"

namespace logint {

struct ConstantResult {
  Real value;
  long digits_requested;
  std::string method_tag;
};

// Euler-Mascheroni constant, correct to `digits` decimal places
// (1 <= digits <= 100). Computed from the harmonic-minus-log limit
// accelerated with the Euler-Maclaurin tail correction; the naive limit
// alone could never reach 20+ decimals at any feasible N.
ConstantResult euler_gamma(long digits);

// Convenience: gamma as a Real at the given working precision, memoized.
Real euler_gamma_value(long digits);

// The defining partial expression H_N - ln N. Converges to gamma like
// 1/(2N); exposed because it is the historically meaningful quantity, not
// a production path for gamma.
Real harmonic_gamma_limit(long n, long digits = Real::kDefaultDigits);

// The unique positive root mu of li (Soldner's constant), found by
// bisection on [1.1, 1.9] down to width 1e-3 followed by Newton steps
// using d/dx li(x) = 1/ln x. Guarantees |li(mu)| < 10^-(digits+2).
// 1 <= digits <= 50.
ConstantResult soldner_mu(long digits);

// Historical digit strings, stored verbatim as golden data.
std::string_view mascheroni_gamma_1790();  // 32 decimals, wrong from the 20th
std::string_view soldner_gamma_1809();     // 22 decimals, all correct
std::string_view soldner_mu_1809();        // 10 decimals, wrong at the 10th

// 1-based index (counting after the decimal point) of the first decimal at
// which the two renderings disagree, or 0 if they agree over the shorter
// fractional length. Integer parts must match.
int first_divergent_decimal(std::string_view a, std::string_view b);

}  // namespace logint

#endif  // LOGINT_CONSTANTS_HPP
