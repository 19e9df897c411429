#ifndef LOGINT_LIFN_HPP
#define LOGINT_LIFN_HPP

#include "logint/real.hpp"

namespace logint {

// Which definite-integral reading of li the caller wants.
//
// PvFromZero is the principal value of the integral of dt/ln t from 0,
// symmetric limits across the pole at t = 1. FromTwo starts the integral
// at 2 instead, so FromTwo(x) = PvFromZero(x) - PvFromZero(2) for x >= 2.
enum class LiConvention { PvFromZero, FromTwo };

// Exponential integral Ei(y), y != 0, via the everywhere-convergent series
//
//   Ei(y) = gamma + ln|y| + sum_{k>=1} y^k / (k * k!)
//
// which realizes the principal value across the pole at t = 0. Terms are
// summed until three consecutive terms drop below 10^-(digits+4) times the
// running absolute sum; for |y| > digits/2 the working precision is raised
// by |y|*log10(e) digits to absorb the alternating-series cancellation that
// appears for negative y.
Real ei(const Real& y);

// Logarithmic integral. PvFromZero requires x > 0, x != 1 and evaluates
// Ei(ln x); FromTwo requires x >= 2.
Real li(const Real& x, LiConvention conv = LiConvention::PvFromZero);

// li(b) - li(a) for 1 < a <= b.
Real li_delta(const Real& a, const Real& b);

}  // namespace logint

#endif  // LOGINT_LIFN_HPP
