#ifndef LOGINT_APPROX_HPP
#define LOGINT_APPROX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "logint/real.hpp"

namespace logint {

// The pi(x) approximation formulas compared throughout the tables.
struct ApproxMethod {
  enum class Kind {
    XOverLnX,     // x / ln x
    Legendre,     // x / (ln x - A), printed A = 1.08366
    DiscreteSum,  // sum_{2<=n<=x} 1/ln n
    Encke,        // x/ln x * 10^(1/(2 ln x)), natural logs
    LiPv,         // li(x), principal value from 0
    LiFrom2,      // li(x) - li(2)
    RiemannR,     // sum mu(n)/n li(x^(1/n))
  };
  Kind kind = Kind::XOverLnX;
  Real legendre_a = Real::from_string("1.08366");  // Legendre only
  int riemann_nmax = 20;                           // RiemannR only

  static ApproxMethod x_over_lnx() { return {Kind::XOverLnX}; }
  static ApproxMethod legendre() { return {Kind::Legendre}; }
  static ApproxMethod legendre(const Real& a) { return {Kind::Legendre, a}; }
  static ApproxMethod discrete_sum() { return {Kind::DiscreteSum}; }
  static ApproxMethod encke() { return {Kind::Encke}; }
  static ApproxMethod li_pv() { return {Kind::LiPv}; }
  static ApproxMethod li_from2() { return {Kind::LiFrom2}; }
  static ApproxMethod riemann_r(int nmax) {
    ApproxMethod m{Kind::RiemannR};
    m.riemann_nmax = nmax;
    return m;
  }
  // Parses "x_over_lnx", "legendre", "legendre:1.05", "discrete_sum",
  // "encke", "li_pv", "li_from2", "riemann_r", "riemann_r:12".
  static ApproxMethod parse(const std::string& text);
};

// Evaluates the formula at x >= 2 (Legendre additionally needs ln x > A).
Real approx_value(const ApproxMethod& method, const Real& x);

// Riemann's Mobius-weighted refinement sum_{n>=1} mu(n)/n li(x^(1/n), PV),
// truncated at nmax or once x^(1/n) drops below 2, whichever comes first.
Real riemann_R(const Real& x, int nmax);

// pi(x) / (x / ln x); lies in the band [0.92129, 1.10555] for large x.
Real chebyshev_ratio(std::uint64_t x, long digits = Real::kDefaultDigits);

// The 1798 ratio observation: at a = 10^k the prime density pi(a)/a is
// close to 1/(2k), i.e. 1/(2 log10 a) -- base-10 logs reproduce the
// printed ratios 1/2, 1/4, 1/6, ...
struct LegendreRatioRow {
  int k;
  std::uint64_t a;  // 10^k
  Real pi_over_a;
  Real half_inv_k;  // 1/(2k)
};
std::vector<LegendreRatioRow> legendre_ratio_table(long digits = Real::kDefaultDigits);

// Least-squares fit of the Legendre constant: the A minimizing
// sum_i (pi(x_i) - x_i/(ln x_i - A))^2 over `samples` log-spaced points
// in [x_lo, x_hi]. samples == 1 solves the single equation exactly.
Real fit_legendre_constant(std::uint64_t x_lo, std::uint64_t x_hi, int samples,
                           long digits = Real::kDefaultDigits);

// One row of the comparative table: exact pi(n) next to the three
// formula columns (kept as Reals; display rounds half-up to integers).
struct ComparisonRow {
  std::uint64_t n;
  std::uint64_t pi_n;
  Real x_over_lnx;
  Real legendre;
  Real li_pv;
};
std::vector<ComparisonRow> comparison_table(const std::vector<std::uint64_t>& ns,
                                            long digits = Real::kDefaultDigits);

}  // namespace logint

#endif  // LOGINT_APPROX_HPP
