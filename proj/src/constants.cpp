#include "logint/constants.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "logint/lifn.hpp"

namespace logint {

namespace {

// B_2 .. B_30 as exact rationals; enough for ~120 decimals at N = 10^4.
struct BernoulliTerm {
  long num;
  long den;
};
constexpr BernoulliTerm kBernoulli[] = {
    {1, 6},           {-1, 30},          {1, 42},
    {-1, 30},         {5, 66},           {-691, 2730},
    {7, 6},           {-3617, 510},      {43867, 798},
    {-174611, 330},   {854513, 138},     {-236364091, 2730},
    {8553103, 6},     {-23749461029, 870},
    {8615841276005, 14322},
};

// gamma = H_N - ln N - 1/(2N) + sum_k B_2k / (2k N^2k); the tail after
// B_30 at N = 10^4 is below 10^-120.
Real gamma_euler_maclaurin(long work_digits) {
  const long n = 10000;
  Real h(0, work_digits);
  for (long k = n; k >= 1; --k) h += Real(1, work_digits) / k;

  Real g = h - ln(Real(n, work_digits)) - Real(1, work_digits) / (2 * n);
  Real n2 = Real(n, work_digits) * n;
  Real npow = n2;
  for (std::size_t k = 1; k <= std::size(kBernoulli); ++k) {
    const auto& b = kBernoulli[k - 1];
    g += Real(b.num, work_digits) / (Real(b.den, work_digits) * Real(2 * static_cast<long>(k), work_digits) * npow);
    npow *= n2;
  }
  return g;
}

}  // namespace

ConstantResult euler_gamma(long digits) {
  if (digits < 1 || digits > 100)
    throw std::out_of_range("euler_gamma: digits must lie in [1, 100]");
  Real g = euler_gamma_value(digits + 16);
  return {g.with_digits(digits + Real::kGuardDigits), digits, "euler-maclaurin"};
}

Real euler_gamma_value(long digits) {
  static std::mutex mu;
  static std::map<long, Real> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(digits);
  if (it == cache.end())
    it = cache.emplace(digits, gamma_euler_maclaurin(digits + 8).with_digits(digits)).first;
  return it->second;
}

Real harmonic_gamma_limit(long n, long digits) {
  if (n < 1) throw std::domain_error("harmonic_gamma_limit: N must be >= 1");
  Real h(0, digits);
  for (long k = n; k >= 1; --k) h += Real(1, digits) / k;
  return h - ln(Real(n, digits));
}

ConstantResult soldner_mu(long digits) {
  if (digits < 1 || digits > 50)
    throw std::out_of_range("soldner_mu: digits must lie in [1, 50]");
  const long work = digits + 12;

  // Bisection from the bracketing interval down to width 1e-3. li is
  // strictly increasing there (integrand 1/ln t > 0 for t > 1).
  Real lo(11, work), hi(19, work);
  lo /= 10;
  hi /= 10;
  if (li(lo).sign() >= 0 || li(hi).sign() <= 0)
    throw std::runtime_error("soldner_mu: bracket does not straddle the root");
  Real width_target = pow(Real(10, work), -3L);
  int guard = 0;
  while (hi - lo > width_target) {
    if (++guard > 64) throw std::runtime_error("soldner_mu: bisection failed to reduce");
    Real mid = (lo + hi) / 2;
    if (li(mid).sign() < 0)
      lo = mid;
    else
      hi = mid;
  }

  // Newton with the closed-form derivative d/dx li(x) = 1/ln x.
  Real x = (lo + hi) / 2;
  Real residual_target = pow(Real(10, work), -(digits + 2));
  for (int it = 0; it < 64; ++it) {
    Real f = li(x);
    if (abs(f) < residual_target)
      return {x.with_digits(digits + Real::kGuardDigits), digits, "bisection+newton"};
    x -= f * ln(x);
  }
  throw std::runtime_error("soldner_mu: Newton iteration failed to converge");
}

std::string_view mascheroni_gamma_1790() { return "0.57721566490153286061811209008239"; }
std::string_view soldner_gamma_1809() { return "0.5772156649015328606065"; }
std::string_view soldner_mu_1809() { return "1.4513692346"; }

int first_divergent_decimal(std::string_view a, std::string_view b) {
  auto dot_a = a.find('.');
  auto dot_b = b.find('.');
  if (dot_a == std::string_view::npos || dot_b == std::string_view::npos ||
      a.substr(0, dot_a) != b.substr(0, dot_b))
    throw std::invalid_argument("first_divergent_decimal: integer parts differ or missing '.'");
  std::string_view fa = a.substr(dot_a + 1);
  std::string_view fb = b.substr(dot_b + 1);
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i)
    if (fa[i] != fb[i]) return static_cast<int>(i) + 1;
  return 0;
}

}  // namespace logint
