#ifndef LOGINT_COMPLEXPATH_HPP
#define LOGINT_COMPLEXPATH_HPP

#include <vector>

#include "logint/real.hpp"

namespace logint {

// Complex number over Real with the principal logarithm (branch cut on
// the negative real axis, Im log in (-pi, pi]).
struct Complex {
  Real re;
  Real im;

  explicit Complex(long digits = Real::kDefaultDigits) : re(digits), im(digits) {}
  Complex(Real re_, Real im_) : re(std::move(re_)), im(std::move(im_)) {}
  Complex(long re_, long im_, long digits = Real::kDefaultDigits)
      : re(re_, digits), im(im_, digits) {}

  long digits() const { return std::max(re.digits(), im.digits()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  Complex operator-() const { return {-re, -im}; }
  Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator*(const Complex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Complex operator/(const Complex& o) const;
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real arg(const Complex& z);             // principal argument in (-pi, pi]
Complex log_principal(const Complex& z);  // throws at z = 0
Complex exp(const Complex& z);

// Complex exponential integral by the entire series plus principal log:
//   Ei(z) = gamma + Log z + sum_{k>=1} z^k/(k k!),  z != 0.
// Coincides with the real ei on the positive axis; branch effects appear
// only through the Log term.
Complex ei_complex(const Complex& z);

// Straight-segment path. No vertex or segment may pass within 1e-6 of the
// origin, where the integrand e^z/z has its pole.
struct Polyline {
  std::vector<Complex> vertices;
  explicit Polyline(std::vector<Complex> v);  // validates pole clearance
};

// Integral of e^z/z along the path: per-segment Gauss-Legendre of order
// 16 with panel counts doubled until successive results differ by less
// than 1e-12.
Complex contour_integral_exp_over_z(const Polyline& path);

// Net winding about the origin accumulated along the path, relative to
// the principal arguments of its endpoints: the integer w such that the
// continuously-followed argument change equals arg(end) - arg(start) + 2 pi w.
long winding_number(const Polyline& path);

// Sine and cosine integrals by their own Taylor series (independent of
// ei_complex); used as the oracle side of the art. 18 identity checks.
//   Si(x) = sum (-1)^k x^(2k+1) / ((2k+1)(2k+1)!)
//   Ci(x) = gamma + ln x + sum_{k>=1} (-1)^k x^(2k) / (2k (2k)!)
Real si_series(const Real& x);
Real ci_series(const Real& x);

// Residuals of the 1812 art. 18 identities in definite form,
//   (Ei(ix) + Ei(-ix))/2       vs  Ci(x)
//   (Ei(ix) - Ei(-ix))/(2i)    vs  Si(x) + pi/2,
// with li(e^(ix)) read as Ei(ix). The printed form divides the sine
// relation by 2ix and omits the pi/2 constant; its residual is reported
// separately by the CLI demo for information.
struct Art18Residuals {
  Real ci_residual;
  Real si_residual;
};
Art18Residuals bessel_art18_check(const Real& x);

}  // namespace logint

#endif  // LOGINT_COMPLEXPATH_HPP
