#include "logint/lifn.hpp"

#include <cmath>
#include <stdexcept>

#include "logint/constants.hpp"

namespace logint {

Real ei(const Real& y) {
  if (y.is_zero()) throw std::domain_error("ei: logarithmic singularity at y = 0");

  long digits = y.digits();
  long work = digits + 10;
  // Cancellation regime: for negative y the partial sums reach ~e^|y| before
  // collapsing, costing |y|*log10(e) decimal digits.
  double ymag = std::fabs(y.to_double());
  if (ymag > static_cast<double>(digits) / 2)
    work += static_cast<long>(std::ceil(ymag * 0.4342944819032518)) + 8;

  Real yw = y.with_digits(work);
  Real sum = euler_gamma_value(work) + ln(abs(yw));
  Real abs_sum = abs(sum);
  Real term(1, work);  // y^k / k!
  Real threshold_scale = pow(Real(10, work), -(digits + 4));

  int below = 0;
  const long max_terms = 1000 + 60 * static_cast<long>(ymag);
  for (long k = 1; k <= max_terms; ++k) {
    term = term * yw / k;
    Real contrib = term / k;
    sum += contrib;
    abs_sum += abs(contrib);
    if (abs(contrib) < threshold_scale * abs_sum) {
      if (++below >= 3) return sum.with_digits(digits);
    } else {
      below = 0;
    }
  }
  throw std::runtime_error("ei: series failed to converge");
}

Real li(const Real& x, LiConvention conv) {
  if (conv == LiConvention::FromTwo) {
    if (x < 2) throw std::domain_error("li: FromTwo convention requires x >= 2");
    return li(x, LiConvention::PvFromZero) - li(Real(2, x.digits()), LiConvention::PvFromZero);
  }
  if (x.sign() <= 0) throw std::domain_error("li: argument must be positive");
  if (x == 1) throw std::domain_error("li: non-integrable singularity at x = 1");
  return ei(ln(x));
}

Real li_delta(const Real& a, const Real& b) {
  if (a <= 1) throw std::domain_error("li_delta: lower endpoint must exceed 1");
  if (b < a) throw std::domain_error("li_delta: endpoints out of order");
  if (a == b) return Real(0, std::max(a.digits(), b.digits()));
  return li(b) - li(a);
}

}  // namespace logint
