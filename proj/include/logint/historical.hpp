#ifndef LOGINT_HISTORICAL_HPP
#define LOGINT_HISTORICAL_HPP

#include <optional>
#include <vector>

#include "logint/real.hpp"

namespace logint {

// Result of one series step: the new li value, the magnitude of the first
// omitted term as an error estimate, and a warning flag set when the terms
// started growing before the requested count was exhausted.
struct StepResult {
  Real value;
  Real error_estimate;
  int terms_used = 0;
  bool diverged = false;
};

// Soldner's 1809 additive recursion
//
//   li(a+x) = li(a) + x/ln a - (1 a A'')/(2! (ln a)^2) y^2
//                           + (2 a A''')/(3! (ln a)^3) y^3 - ...
//   y = ln(1 + x/a)
//
// with A'' = 1, A''' = 1*A'' - ln a, A'''' = 2*A''' + (ln a)^2, and in
// general A^(n+1) = (n-1) A^(n) + (-ln a)^(n-1): the sign of the power
// term keeps alternating (closed form A^(n) = (n-2)! sum_{j<=n-2}
// (-ln a)^j / j!, which reproduces the printed coefficients and makes the
// series converge for y < ln a).
struct SoldnerCoeffs {
  Real base;                 // the anchor point a
  std::vector<Real> coeffs;  // A'', A''', A'''', ...
};
SoldnerCoeffs soldner_coeffs(const Real& a, int count);

// One step li(a) -> li(a+x). Requires a > 1, x >= 0 and the step-size
// guard x/a <= 1/2; truncates at max_terms or at the smallest-magnitude
// term, whichever comes first.
StepResult soldner_step(const Real& li_a, const Real& a, const Real& x, int max_terms);

struct LiTableRow {
  Real x;
  Real li_value;
  Real error_estimate;  // accumulated first-omitted-term magnitudes
  std::optional<Real> printed_li;
  std::optional<long> printed_pi;
  std::optional<Real> printed_excess;
};
struct LiTable {
  std::vector<LiTableRow> rows;
};

// Abscissa schedule for chained Soldner steps from the li(2) anchor.
struct StepSchedule {
  enum class Kind { Unit, Custom };
  Kind kind = Kind::Unit;
  std::vector<Real> points;  // Custom only: ascending abscissas > 2

  static StepSchedule unit() { return {}; }
  static StepSchedule custom(std::vector<Real> pts) {
    return {Kind::Custom, std::move(pts)};
  }
};

// Builds the chained table from li(2) up to x_max (<= 10^4). Every row
// carries the error estimate accumulated along the chain.
LiTable soldner_table(const Real& x_max, const StepSchedule& schedule = StepSchedule::unit(),
                      int max_terms = 200);

// Bessel's 1810 multiplicative recursion
//
//   li(x/a) = li(x) + x { A'/ln x + A''/(ln x)^2 + A'''/(ln x)^3 + ... }
//
// with A' = 1/a - 1, A'' = A' + ln(a)/a, A''' = 2 A'' + (ln a)^2/a and in
// general A^(k+1) = k A^(k) + (ln a)^k / a. Read upward it advances
// li(X) -> li(aX), a geometric step instead of Soldner's arithmetic one.
struct BesselCoeffs {
  Real ratio;                // the step ratio a
  std::vector<Real> coeffs;  // A', A'', A''', ...
};
BesselCoeffs bessel_coeffs(const Real& a, int count);

// General ratio step li(x_prev) -> li(a * x_prev) using coeffs built for a.
StepResult bessel_step(const Real& li_prev, const Real& x_prev, const BesselCoeffs& coeffs,
                       int max_terms = 0 /* 0 = all coefficients */);

// Power-of-ten stepping li(10^(n-1)) -> li(10^n), n >= 2, coeffs built
// with a = 10:
//
//   li(10^n) = li(10^(n-1)) - A'/ln10 * 10^n/n - A''/(ln10)^2 * 10^n/n^2 - ...
StepResult bessel_pow10_step(const Real& li_prev, int n, const BesselCoeffs& coeffs,
                             int max_terms = 0);

// The seven-row 1810 table: x in {1e3, 1e4, 1e5, 2e5, 3e5, 4e5, 1e6} with
// li chained by Bessel steps from the series anchor at 1e3, alongside the
// printed 1810 values, the printed (Vega-derived) prime counts and the
// printed excess column. Printed columns are immutable historical data.
LiTable bessel_table_1810(long digits = Real::kDefaultDigits);

}  // namespace logint

#endif  // LOGINT_HISTORICAL_HPP
