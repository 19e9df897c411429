#include "logint/approx.hpp"

#include <cmath>
#include <stdexcept>

#include "logint/lifn.hpp"
#include "logint/primes.hpp"

namespace logint {

ApproxMethod ApproxMethod::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (name == "x_over_lnx") return x_over_lnx();
  if (name == "legendre") return arg.empty() ? legendre() : legendre(Real::from_string(arg));
  if (name == "discrete_sum") return discrete_sum();
  if (name == "encke") return encke();
  if (name == "li_pv") return li_pv();
  if (name == "li_from2") return li_from2();
  if (name == "riemann_r") return riemann_r(arg.empty() ? 20 : std::stoi(arg));
  throw std::invalid_argument("unknown approximation method '" + text + "'");
}

Real approx_value(const ApproxMethod& method, const Real& x) {
  if (x < 2) throw std::domain_error("approx_value: x must be >= 2");
  long d = x.digits();
  switch (method.kind) {
    case ApproxMethod::Kind::XOverLnX:
      return x / ln(x);
    case ApproxMethod::Kind::Legendre: {
      Real denom = ln(x) - method.legendre_a.with_digits(d);
      if (denom.sign() <= 0)
        throw std::domain_error("approx_value: Legendre formula needs ln x > A");
      return x / denom;
    }
    case ApproxMethod::Kind::DiscreteSum: {
      long n_max = floor(x).to_long();
      Real sum(0, d);
      for (long n = 2; n <= n_max; ++n) sum += 1 / ln(Real(n, d));
      return sum;
    }
    case ApproxMethod::Kind::Encke: {
      // n/ln n * 10^(1/(2 ln n)) with the hyperbolic (natural) reading
      Real l = ln(x);
      return x / l * exp(ln(Real(10, d)) / (2 * l));
    }
    case ApproxMethod::Kind::LiPv:
      return li(x, LiConvention::PvFromZero);
    case ApproxMethod::Kind::LiFrom2:
      return li(x, LiConvention::FromTwo);
    case ApproxMethod::Kind::RiemannR:
      return riemann_R(x, method.riemann_nmax);
  }
  throw std::logic_error("approx_value: unreachable");
}

Real riemann_R(const Real& x, int nmax) {
  if (x < 2) throw std::domain_error("riemann_R: x must be >= 2");
  if (nmax < 1) throw std::domain_error("riemann_R: nmax must be >= 1");
  long d = x.digits();
  auto mu = primes::mobius_upto(static_cast<std::uint32_t>(nmax));
  Real sum(0, d);
  Real lx = ln(x);
  for (int n = 1; n <= nmax; ++n) {
    Real root = exp(lx / n);  // x^(1/n)
    if (root < 2) break;      // the series terminates naturally
    if (mu[n] == 0) continue;
    Real term = li(root, LiConvention::PvFromZero) / n;
    sum += mu[n] > 0 ? term : -term;
  }
  return sum;
}

Real chebyshev_ratio(std::uint64_t x, long digits) {
  Real pi_x(static_cast<long>(primes::prime_pi(x)), digits);
  Real xr(static_cast<long>(x), digits);
  return pi_x * ln(xr) / xr;
}

std::vector<LegendreRatioRow> legendre_ratio_table(long digits) {
  std::vector<std::uint64_t> points;
  std::uint64_t a = 1;
  for (int k = 1; k <= 5; ++k) points.push_back(a *= 10);
  auto pis = primes::prime_pi_many(points);

  std::vector<LegendreRatioRow> rows;
  for (int k = 1; k <= 5; ++k) {
    Real pi_over_a = Real(static_cast<long>(pis[k - 1]), digits) / Real(static_cast<long>(points[k - 1]), digits);
    rows.push_back({k, points[k - 1], pi_over_a, Real(1, digits) / (2 * k)});
  }
  return rows;
}

Real fit_legendre_constant(std::uint64_t x_lo, std::uint64_t x_hi, int samples, long digits) {
  if (x_lo < 1000 || x_hi <= x_lo || x_hi > primes::kMaxLimit)
    throw std::domain_error("fit_legendre_constant: need 10^3 <= x_lo < x_hi <= 10^8");
  if (samples < 1) throw std::domain_error("fit_legendre_constant: samples must be >= 1");

  // log-spaced sample abscissas, deduplicated after integer rounding
  std::vector<std::uint64_t> xs;
  if (samples == 1) {
    xs.push_back(x_hi);
  } else {
    double llo = std::log(static_cast<double>(x_lo));
    double lhi = std::log(static_cast<double>(x_hi));
    for (int i = 0; i < samples; ++i) {
      auto x = static_cast<std::uint64_t>(
          std::llround(std::exp(llo + (lhi - llo) * i / (samples - 1))));
      if (xs.empty() || x != xs.back()) xs.push_back(x);
    }
  }
  auto pis = primes::prime_pi_many(xs);

  if (xs.size() == 1) {
    // single equation pi = x/(ln x - A)  =>  A = ln x - x/pi
    Real x(static_cast<long>(xs[0]), digits);
    return ln(x) - x / Real(static_cast<long>(pis[0]), digits);
  }

  std::vector<Real> lns, pis_r, xs_r;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs_r.emplace_back(static_cast<long>(xs[i]), digits);
    lns.push_back(ln(xs_r.back()));
    pis_r.emplace_back(static_cast<long>(pis[i]), digits);
  }
  auto sse = [&](const Real& a) {
    Real s(0, digits);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Real r = pis_r[i] - xs_r[i] / (lns[i] - a);
      s += r * r;
    }
    return s;
  };

  // golden-section search on a bracket comfortably containing the optimum
  Real lo(0, digits), hi(2, digits);
  Real phi = (sqrt(Real(5, digits)) - 1) / 2;
  Real c = hi - phi * (hi - lo);
  Real dpt = lo + phi * (hi - lo);
  Real fc = sse(c), fd = sse(dpt);
  for (int it = 0; it < 160; ++it) {
    if (fc < fd) {
      hi = dpt;
      dpt = c;
      fd = fc;
      c = hi - phi * (hi - lo);
      fc = sse(c);
    } else {
      lo = c;
      c = dpt;
      fc = fd;
      dpt = lo + phi * (hi - lo);
      fd = sse(dpt);
    }
  }
  return (lo + hi) / 2;
}

std::vector<ComparisonRow> comparison_table(const std::vector<std::uint64_t>& ns, long digits) {
  auto pis = primes::prime_pi_many(ns);
  std::vector<ComparisonRow> rows;
  rows.reserve(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    Real x(static_cast<long>(ns[i]), digits);
    rows.push_back({ns[i], pis[i], approx_value(ApproxMethod::x_over_lnx(), x),
                    approx_value(ApproxMethod::legendre(), x), li(x, LiConvention::PvFromZero)});
  }
  return rows;
}

}  // namespace logint
