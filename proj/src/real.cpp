#include "logint/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace logint {

namespace {
constexpr double kLog2Of10 = 3.321928094887362;  // bits per decimal digit
}

mpfr_prec_t Real::bits_for(long digits) {
  if (digits < 1) throw std::invalid_argument("Real: precision must be >= 1 digit");
  // 16 guard bits so the decimal ulp contract survives rounding of results.
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 16;
}

Real::Real(long digits) : digits_(digits) {
  mpfr_init2(v_, bits_for(digits));
  mpfr_set_zero(v_, 1);
}

Real::Real(double value, long digits) : digits_(digits) {
  mpfr_init2(v_, bits_for(digits));
  mpfr_set_d(v_, value, MPFR_RNDN);
}

Real::Real(long value, long digits) : digits_(digits) {
  mpfr_init2(v_, bits_for(digits));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const Real& other) : digits_(other.digits_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    mpfr_swap(v_, other.v_);
    digits_ = other.digits_;
  }
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_string(std::string_view text, long digits) {
  Real r(digits);
  std::string owned(text);
  if (mpfr_set_str(r.v_, owned.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("Real: cannot parse '" + owned + "'");
  return r;
}

Real Real::pi(long digits) {
  Real r(digits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::with_digits(long digits) const {
  Real r(digits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(long frac_digits, bool truncate) const {
  if (frac_digits < 0) throw std::invalid_argument("Real::to_string: negative digits");
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%ldR%cf", frac_digits, truncate ? 'Z' : 'N');
  char* out = nullptr;
  mpfr_asprintf(&out, fmt, v_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

std::string Real::to_string_sig(long sig_digits) const {
  if (sig_digits < 1) throw std::invalid_argument("Real::to_string_sig: digits must be >= 1");
  char fmt[32];
  std::snprintf(fmt, sizeof fmt, "%%.%ldRNg", sig_digits);
  char* out = nullptr;
  mpfr_asprintf(&out, fmt, v_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

Real Real::operator-() const {
  Real r(digits_);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

#define LOGINT_BINOP(op, fn)                                               \
  Real Real::operator op(const Real& rhs) const {                         \
    Real r(std::max(digits_, rhs.digits_));                               \
    fn(r.v_, v_, rhs.v_, MPFR_RNDN);             \
    return r;                                                             \
  }                                                                       \
  Real Real::operator op(long rhs) const {                                \
    Real r(digits_);                                                      \
    fn##_si(r.v_, v_, rhs, MPFR_RNDN);           \
    return r;                                                             \
  }

LOGINT_BINOP(+, mpfr_add)
LOGINT_BINOP(-, mpfr_sub)
LOGINT_BINOP(*, mpfr_mul)
#undef LOGINT_BINOP

Real Real::operator/(const Real& rhs) const {
  if (rhs.is_zero()) throw std::domain_error("Real: division by zero");
  Real r(std::max(digits_, rhs.digits_));
  mpfr_div(r.v_, v_, rhs.v_, MPFR_RNDN);
  return r;
}

Real Real::operator/(long rhs) const {
  if (rhs == 0) throw std::domain_error("Real: division by zero");
  Real r(digits_);
  mpfr_div_si(r.v_, v_, rhs, MPFR_RNDN);
  return r;
}

Real operator+(long lhs, const Real& rhs) { return rhs + lhs; }
Real operator-(long lhs, const Real& rhs) { return -(rhs - lhs); }
Real operator*(long lhs, const Real& rhs) { return rhs * lhs; }
Real operator/(long lhs, const Real& rhs) { return Real(lhs, rhs.digits()) / rhs; }

Real ln(const Real& x) {
  if (x.sign() <= 0) throw std::domain_error("ln: argument must be positive");
  Real r(x.digits_);
  mpfr_log(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r(x.digits_);
  mpfr_exp(r.v_, x.v_, MPFR_RNDN);
  if (r.is_inf()) throw std::overflow_error("exp: result overflows the representable range");
  return r;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw std::domain_error("sqrt: argument must be non-negative");
  Real r(x.digits_);
  mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const Real& exponent) {
  Real r(std::max(base.digits_, exponent.digits_));
  mpfr_pow(r.v_, base.v_, exponent.v_, MPFR_RNDN);
  if (r.is_nan()) throw std::domain_error("pow: result is not a real number");
  if (r.is_inf()) throw std::overflow_error("pow: result overflows the representable range");
  return r;
}

Real pow(const Real& base, long exponent) {
  Real r(base.digits_);
  mpfr_pow_si(r.v_, base.v_, exponent, MPFR_RNDN);
  if (r.is_inf()) throw std::overflow_error("pow: result overflows the representable range");
  return r;
}

Real abs(const Real& x) {
  Real r(x.digits_);
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real floor(const Real& x) {
  Real r(x.digits_);
  mpfr_floor(r.v_, x.v_);
  return r;
}

Real sin(const Real& x) {
  Real r(x.digits_);
  mpfr_sin(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real cos(const Real& x) {
  Real r(x.digits_);
  mpfr_cos(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(std::max(y.digits_, x.digits_));
  mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r(std::max(x.digits_, y.digits_));
  mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
  return r;
}

long round_half_up(const Real& x) {
  Real half = Real(1, x.digits()) / 2;
  Real shifted = x.sign() >= 0 ? x + half : x - half;
  Real t(x.digits());
  mpfr_trunc(t.v_, shifted.v_);
  return t.to_long();
}

}  // namespace logint
