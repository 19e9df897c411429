#ifndef LOGINT_QUADRATURE_HPP
#define LOGINT_QUADRATURE_HPP

#include <vector>

#include "logint/real.hpp"

namespace logint {

// n-point Gauss-Legendre rule on [-1, 1]. Nodes are the roots of the
// degree-n Legendre polynomial; the rule integrates polynomials of degree
// <= 2n-1 exactly. Nodes and weights are symmetric about 0 and the
// weights sum to 2.
struct QuadratureRule {
  int order = 0;
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

// Builds the rule by Newton iteration on P_n from the standard asymptotic
// initial guesses cos(pi (i - 1/4)/(n + 1/2)), 1 <= n <= 40.
QuadratureRule legendre_rule(int n, long digits = Real::kDefaultDigits);

// Composite integral of dt/ln t over [a, b] split into `panels` equal
// subintervals, one rule application per panel. Requires 1 < a <= b
// (the integrand pole at t = 1 must lie outside); a == b gives 0.
Real integrate_recip_log(const Real& a, const Real& b, const QuadratureRule& rule, int panels = 1);

// The 1815 demonstration: the integral of dt/ln t over [1e5, 2e5] by a
// single rule application at n in {4, 7, 10, 16}, compared against the
// series-based li difference.
struct Gauss1815Row {
  int nodes;
  Real value;
  Real abs_error;  // |value - reference|
  Real rel_error;
};
struct Gauss1815Report {
  Real reference;  // li(2e5) - li(1e5) from the series evaluator
  std::vector<Gauss1815Row> rows;
};
Gauss1815Report gauss_1815_demo(long digits = Real::kDefaultDigits);

}  // namespace logint

#endif  // LOGINT_QUADRATURE_HPP
