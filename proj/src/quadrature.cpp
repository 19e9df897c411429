#include "logint/quadrature.hpp"

#include <stdexcept>

#include "logint/lifn.hpp"

namespace logint {

namespace {

// P_n(x) and P'_n(x) by the three-term recurrence.
void legendre_eval(int n, const Real& x, Real& p, Real& dp) {
  long d = x.digits();
  Real p0(1, d), p1 = x;
  for (int k = 2; k <= n; ++k) {
    Real p2 = (Real(2 * k - 1, d) * x * p1 - Real(k - 1, d) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  // P'_n(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
  dp = Real(n, d) * (x * p1 - p0) / (x * x - 1);
}

}  // namespace

QuadratureRule legendre_rule(int n, long digits) {
  if (n < 1 || n > 40) throw std::domain_error("legendre_rule: order must lie in [1, 40]");
  const long work = digits + 8;

  QuadratureRule rule;
  rule.order = n;
  rule.nodes.assign(n, Real(work));
  rule.weights.assign(n, Real(work));

  if (n == 1) {
    rule.nodes[0] = Real(0, work);
    rule.weights[0] = Real(2, work);
    return rule;
  }

  Real pi = Real::pi(work);
  Real tol = pow(Real(10, work), -(digits + 4));
  const int half = (n + 1) / 2;
  for (int i = 1; i <= half; ++i) {
    // cos(pi (i - 1/4)/(n + 1/2))
    Real x = cos(pi * (Real(4 * i - 1, work) / (4 * n + 2)));
    Real p(work), dp(work);
    int iter = 0;
    while (true) {
      if (++iter >= 100) throw std::runtime_error("legendre_rule: Newton failed to converge");
      legendre_eval(n, x, p, dp);
      Real step = p / dp;
      x -= step;
      if (abs(step) < tol) break;
    }
    legendre_eval(n, x, p, dp);
    Real w = Real(2, work) / ((1 - x * x) * dp * dp);
    // nodes come out descending from the cosine guesses; store ascending
    // and mirror so symmetry is exact
    rule.nodes[i - 1] = -x;
    rule.nodes[n - i] = x;
    rule.weights[i - 1] = w;
    rule.weights[n - i] = w;
  }
  if (n % 2 == 1) rule.nodes[half - 1] = Real(0, work);  // middle node is exactly 0
  return rule;
}

Real integrate_recip_log(const Real& a, const Real& b, const QuadratureRule& rule, int panels) {
  if (panels < 1) throw std::domain_error("integrate_recip_log: panels must be >= 1");
  if (a > b) throw std::domain_error("integrate_recip_log: endpoints out of order");
  if (a <= 1) throw std::domain_error("integrate_recip_log: interval must lie right of the pole at t = 1");
  long d = std::max(a.digits(), b.digits());
  if (a == b) return Real(0, d);

  Real width = (b - a) / panels;
  Real total(0, d);
  for (int p = 0; p < panels; ++p) {
    Real lo = a + width * p;
    Real mid = lo + width / 2;
    Real half = width / 2;
    Real acc(0, d);
    for (int i = 0; i < rule.order; ++i)
      acc += rule.weights[i] / ln(mid + half * rule.nodes[i]);
    total += acc * half;
  }
  return total;
}

Gauss1815Report gauss_1815_demo(long digits) {
  Real a = pow(Real(10, digits), 5L);
  Real b = a * 2;
  Gauss1815Report report{li_delta(a, b), {}};
  for (int n : {4, 7, 10, 16}) {
    Real q = integrate_recip_log(a, b, legendre_rule(n, digits), 1);
    Real err = abs(q - report.reference);
    report.rows.push_back({n, q, err, err / report.reference});
  }
  return report;
}

}  // namespace logint
