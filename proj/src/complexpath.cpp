#include "logint/complexpath.hpp"

#include <cmath>
#include <stdexcept>

#include "logint/constants.hpp"
#include "logint/quadrature.hpp"

namespace logint {

Complex Complex::operator/(const Complex& o) const {
  Real n = o.re * o.re + o.im * o.im;
  if (n.is_zero()) throw std::domain_error("Complex: division by zero");
  return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Real abs(const Complex& z) { return hypot(z.re, z.im); }

Real arg(const Complex& z) {
  if (z.is_zero()) throw std::domain_error("arg: undefined at 0");
  return atan2(z.im, z.re);
}

Complex log_principal(const Complex& z) {
  if (z.is_zero()) throw std::domain_error("log: singular at 0");
  return {ln(abs(z)), arg(z)};
}

Complex exp(const Complex& z) {
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex ei_complex(const Complex& z) {
  if (z.is_zero()) throw std::domain_error("ei: logarithmic singularity at z = 0");
  long digits = z.digits();
  long work = digits + 10;
  double zmag = std::hypot(z.re.to_double(), z.im.to_double());
  if (zmag > static_cast<double>(digits) / 2)
    work += static_cast<long>(std::ceil(zmag * 0.4342944819032518)) + 8;

  Complex zw{z.re.with_digits(work), z.im.with_digits(work)};
  Complex sum = log_principal(zw);
  sum.re += euler_gamma_value(work);
  Real abs_sum = abs(sum);
  Complex term{Real(1, work), Real(0, work)};  // z^k / k!
  Real threshold_scale = pow(Real(10, work), -(digits + 4));

  int below = 0;
  const long max_terms = 1000 + 60 * static_cast<long>(zmag);
  for (long k = 1; k <= max_terms; ++k) {
    term = term * zw;
    term.re = term.re / k;
    term.im = term.im / k;
    Complex contrib{term.re / k, term.im / k};
    sum += contrib;
    abs_sum += abs(contrib);
    if (abs(contrib) < threshold_scale * abs_sum) {
      if (++below >= 3) return {sum.re.with_digits(digits), sum.im.with_digits(digits)};
    } else {
      below = 0;
    }
  }
  throw std::runtime_error("ei_complex: series failed to converge");
}

namespace {

constexpr double kPoleClearance = 1e-6;

// Distance from the origin to the segment [p, q], in double precision
// (only used against the coarse 1e-6 clearance threshold).
double segment_origin_distance(const Complex& p, const Complex& q) {
  double px = p.re.to_double(), py = p.im.to_double();
  double qx = q.re.to_double(), qy = q.im.to_double();
  double dx = qx - px, dy = qy - py;
  double len2 = dx * dx + dy * dy;
  if (len2 == 0) return std::hypot(px, py);
  double t = -(px * dx + py * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(px + t * dx, py + t * dy);
}

}  // namespace

Polyline::Polyline(std::vector<Complex> v) : vertices(std::move(v)) {
  if (vertices.empty()) throw std::domain_error("Polyline: needs at least one vertex");
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (segment_origin_distance(vertices[i], vertices[i + 1]) < kPoleClearance)
      throw std::domain_error("Polyline: path passes within 1e-6 of the pole at 0");
  if (vertices.size() == 1 && abs(vertices[0]).to_double() < kPoleClearance)
    throw std::domain_error("Polyline: vertex within 1e-6 of the pole at 0");
}

Complex contour_integral_exp_over_z(const Polyline& path) {
  long digits = path.vertices.front().digits();
  Complex total(digits);
  if (path.vertices.size() < 2) return total;

  QuadratureRule rule = legendre_rule(16, digits);
  Real tol = pow(Real(10, digits), -12L);

  for (std::size_t s = 0; s + 1 < path.vertices.size(); ++s) {
    const Complex& z0 = path.vertices[s];
    Complex dz = path.vertices[s + 1] - z0;

    auto integrate = [&](int panels) {
      Complex acc(digits);
      for (int p = 0; p < panels; ++p) {
        // panel [p/panels, (p+1)/panels] of the segment parameter
        Real t0 = Real(2 * p + 1, digits) / (2 * panels);  // midpoint
        Real half = Real(1, digits) / (2 * panels);
        for (int i = 0; i < rule.order; ++i) {
          Real t = t0 + half * rule.nodes[i];
          Complex z = z0 + Complex{dz.re * t, dz.im * t};
          Complex f = exp(z) / z;
          acc += Complex{f.re * rule.weights[i], f.im * rule.weights[i]};
        }
      }
      Real scale = Real(1, digits) / (2 * panels);
      return Complex{acc.re * scale * dz.re - acc.im * scale * dz.im,
                     acc.re * scale * dz.im + acc.im * scale * dz.re};
    };

    Complex prev = integrate(1);
    for (int panels = 2; panels <= 1024; panels *= 2) {
      Complex cur = integrate(panels);
      if (abs(cur - prev) < tol) {
        prev = cur;
        break;
      }
      prev = cur;
      if (panels == 1024)
        throw std::runtime_error("contour_integral: panel refinement failed to settle");
    }
    total += prev;
  }
  return total;
}

long winding_number(const Polyline& path) {
  if (path.vertices.size() < 2) return 0;
  long digits = path.vertices.front().digits();
  Real turn(0, digits);
  // A straight segment avoiding the origin subtends less than pi, so the
  // principal argument of the endpoint ratio is the exact turn.
  for (std::size_t s = 0; s + 1 < path.vertices.size(); ++s)
    turn += arg(path.vertices[s + 1] / path.vertices[s]);
  Real residual = turn - (arg(path.vertices.back()) - arg(path.vertices.front()));
  return round_half_up(residual / (2 * Real::pi(digits)));
}

Real si_series(const Real& x) {
  long d = x.digits();
  long work = d + 10;
  Real xw = x.with_digits(work);
  Real x2 = xw * xw;
  Real term = xw;  // x^(2k+1)/(2k+1)!
  Real sum = xw;
  Real threshold = pow(Real(10, work), -(d + 4));
  for (long k = 1; k < 10000; ++k) {
    term = term * x2 / (2 * k) / (2 * k + 1);
    Real contrib = term / (2 * k + 1);
    sum = (k % 2 == 1) ? sum - contrib : sum + contrib;
    if (abs(contrib) < threshold * abs(sum)) return sum.with_digits(d);
  }
  throw std::runtime_error("si_series: failed to converge");
}

Real ci_series(const Real& x) {
  if (x.sign() <= 0) throw std::domain_error("ci_series: x must be positive");
  long d = x.digits();
  long work = d + 10;
  Real xw = x.with_digits(work);
  Real x2 = xw * xw;
  Real sum = euler_gamma_value(work) + ln(xw);
  Real term(1, work);  // x^(2k)/(2k)!
  Real threshold = pow(Real(10, work), -(d + 4));
  for (long k = 1; k < 10000; ++k) {
    term = term * x2 / (2 * k - 1) / (2 * k);
    Real contrib = term / (2 * k);
    sum = (k % 2 == 1) ? sum - contrib : sum + contrib;
    if (abs(contrib) < threshold * (abs(sum) + 1)) return sum.with_digits(d);
  }
  throw std::runtime_error("ci_series: failed to converge");
}

Art18Residuals bessel_art18_check(const Real& x) {
  if (x.sign() <= 0) throw std::domain_error("bessel_art18_check: x must be positive");
  long d = x.digits();
  Complex e_plus = ei_complex(Complex{Real(0, d), x});
  Complex e_minus = ei_complex(Complex{Real(0, d), -x});

  // (Ei(ix)+Ei(-ix))/2 = Re Ei(ix); (Ei(ix)-Ei(-ix))/(2i) = Im Ei(ix)
  Real cos_side = (e_plus.re + e_minus.re) / 2;
  Real sin_side = (e_plus.im - e_minus.im) / 2;
  Real half_pi = Real::pi(d) / 2;
  return {abs(cos_side - ci_series(x)), abs(sin_side - (si_series(x) + half_pi))};
}

}  // namespace logint
