#ifndef LOGINT_REAL_HPP
#define LOGINT_REAL_HPP

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace logint {

// Arbitrary-precision real number. Precision is carried per value as a
// count of significant decimal digits; results of binary operations take
// the wider of the two operand precisions. Values are immutable after
// construction (every operation returns a fresh value), so concurrent
// reads are safe.
//
// Arithmetic is correctly rounded to nearest in the underlying binary
// precision, which is chosen with guard bits so that +,-,*,/ are exact to
// <1 unit in the last requested decimal digit and ln/exp/pow/sqrt to <2.
class Real {
 public:
  static constexpr long kDefaultDigits = 64;
  static constexpr long kGuardDigits = 8;  // display digits <= digits - guard

  explicit Real(long digits = kDefaultDigits);
  Real(double value, long digits);
  Real(long value, long digits);
  Real(int value, long digits) : Real(static_cast<long>(value), digits) {}

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_string(std::string_view text, long digits = kDefaultDigits);
  static Real pi(long digits);

  long digits() const { return digits_; }
  mpfr_prec_t prec_bits() const { return mpfr_get_prec(v_); }

  // Returns a copy of this value rounded to a different working precision.
  Real with_digits(long digits) const;

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // Fixed-point rendering with the given number of fractional digits.
  // truncate=true chops toward zero (used for digit-prefix comparisons),
  // otherwise rounds to nearest.
  std::string to_string(long frac_digits, bool truncate = false) const;
  // Scientific-style rendering with the given significant digits.
  std::string to_string_sig(long sig_digits) const;

  Real operator-() const;
  Real operator+(const Real& rhs) const;
  Real operator-(const Real& rhs) const;
  Real operator*(const Real& rhs) const;
  Real operator/(const Real& rhs) const;

  Real operator+(long rhs) const;
  Real operator-(long rhs) const;
  Real operator*(long rhs) const;
  Real operator/(long rhs) const;

  Real& operator+=(const Real& rhs) { return *this = *this + rhs; }
  Real& operator-=(const Real& rhs) { return *this = *this - rhs; }
  Real& operator*=(const Real& rhs) { return *this = *this * rhs; }
  Real& operator/=(const Real& rhs) { return *this = *this / rhs; }
  Real& operator+=(long rhs) { return *this = *this + rhs; }
  Real& operator-=(long rhs) { return *this = *this - rhs; }
  Real& operator*=(long rhs) { return *this = *this * rhs; }
  Real& operator/=(long rhs) { return *this = *this / rhs; }

  int compare(const Real& rhs) const { return mpfr_cmp(v_, rhs.v_); }
  bool operator<(const Real& rhs) const { return compare(rhs) < 0; }
  bool operator>(const Real& rhs) const { return compare(rhs) > 0; }
  bool operator<=(const Real& rhs) const { return compare(rhs) <= 0; }
  bool operator>=(const Real& rhs) const { return compare(rhs) >= 0; }
  bool operator==(const Real& rhs) const { return compare(rhs) == 0; }
  bool operator!=(const Real& rhs) const { return compare(rhs) != 0; }

  int compare(long rhs) const { return mpfr_cmp_si(v_, rhs); }
  bool operator<(long rhs) const { return compare(rhs) < 0; }
  bool operator>(long rhs) const { return compare(rhs) > 0; }
  bool operator<=(long rhs) const { return compare(rhs) <= 0; }
  bool operator>=(long rhs) const { return compare(rhs) >= 0; }
  bool operator==(long rhs) const { return compare(rhs) == 0; }
  bool operator!=(long rhs) const { return compare(rhs) != 0; }

  // Raw handle for the implementation of the math functions below.
  mpfr_srcptr raw() const { return v_; }

  friend Real ln(const Real& x);
  friend Real exp(const Real& x);
  friend Real sqrt(const Real& x);
  friend Real pow(const Real& base, const Real& exponent);
  friend Real pow(const Real& base, long exponent);
  friend Real abs(const Real& x);
  friend Real floor(const Real& x);
  friend Real sin(const Real& x);
  friend Real cos(const Real& x);
  friend Real atan2(const Real& y, const Real& x);
  friend Real hypot(const Real& x, const Real& y);
  friend long round_half_up(const Real& x);

 private:
  static mpfr_prec_t bits_for(long digits);

  mpfr_t v_;
  long digits_;
};

Real operator+(long lhs, const Real& rhs);
Real operator-(long lhs, const Real& rhs);
Real operator*(long lhs, const Real& rhs);
Real operator/(long lhs, const Real& rhs);

Real ln(const Real& x);   // natural (hyperbolic) logarithm; throws on x <= 0
Real exp(const Real& x);  // throws std::overflow_error on overflow
Real sqrt(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real abs(const Real& x);
Real floor(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);

// Nearest integer, ties away from zero (half-up for positive values).
long round_half_up(const Real& x);

}  // namespace logint

#endif  // LOGINT_REAL_HPP
