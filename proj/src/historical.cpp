#include "logint/historical.hpp"

#include <stdexcept>

#include "logint/lifn.hpp"

namespace logint {

SoldnerCoeffs soldner_coeffs(const Real& a, int count) {
  if (a <= 1) throw std::domain_error("soldner_coeffs: base must exceed 1");
  if (count < 1) throw std::domain_error("soldner_coeffs: count must be >= 1");
  long d = a.digits();
  Real neg_ln_a = -ln(a);
  SoldnerCoeffs sc{a, {}};
  sc.coeffs.reserve(count);
  sc.coeffs.push_back(Real(1, d));  // A''
  Real power = neg_ln_a;            // (-ln a)^(n-1)
  for (int n = 2; n < count + 1; ++n) {
    if (static_cast<int>(sc.coeffs.size()) == count) break;
    sc.coeffs.push_back(Real(n - 1, d) * sc.coeffs.back() + power);
    power *= neg_ln_a;
  }
  return sc;
}

StepResult soldner_step(const Real& li_a, const Real& a, const Real& x, int max_terms) {
  if (a <= 1) throw std::domain_error("soldner_step: base must exceed 1");
  if (x.sign() < 0) throw std::domain_error("soldner_step: step must be non-negative");
  if (max_terms < 2) throw std::domain_error("soldner_step: need at least 2 terms");
  long d = std::max(li_a.digits(), a.digits());
  if (x.is_zero()) return {li_a, Real(0, d), 0, false};
  if (x * 2 > a) throw std::domain_error("soldner_step: step too large, x/a must be <= 1/2");

  Real ln_a = ln(a);
  Real y = ln(1 + x / a);
  Real value = li_a + x / ln_a;
  Real threshold = pow(Real(10, d), -(d + 4));

  // The expansion behind the series converges exactly when y < ln a. In
  // that regime term magnitudes may blip locally (the coefficients change
  // sign structure; at a = 3, A''' = 1 - ln 3 nearly vanishes), so growth
  // of a single term is not treated as divergence. For y >= ln a the
  // series is genuinely divergent and is cut at the smallest term.
  const bool convergent = y < ln_a;

  // term_n = (-1)^(n+1) (n-1) a A^(n) / (n! (ln a)^n) * y^n, n >= 2;
  // carried incrementally: factor_n = (-1)^(n+1) a y^n / (n! (ln a)^n).
  Real A(1, d);                              // A^(n)
  Real neg_ln_a = -ln_a;
  Real power = neg_ln_a;                     // (-ln a)^(n-1)
  Real factor = -a * y * y / (2 * ln_a * ln_a);  // n = 2
  Real prev_mag(0, d);
  StepResult out{value, Real(0, d), 1, false};
  for (int n = 2; n <= max_terms; ++n) {
    if (n > 2) {
      A = Real(n - 2, d) * A + power;
      power *= neg_ln_a;
      factor = -factor * y / (n * ln_a);
    }
    Real term = factor * Real(n - 1, d) * A;
    Real mag = abs(term);
    if (!convergent && n > 2 && mag > prev_mag) {
      // smallest-magnitude term already passed; omit the growing term
      out.error_estimate = mag;
      out.diverged = true;
      return out;
    }
    out.value += term;
    out.terms_used = n;
    prev_mag = mag;
    if (mag < threshold * abs(out.value)) {
      out.error_estimate = mag;
      return out;
    }
  }
  // truncated by max_terms: estimate with the first omitted term
  int n = max_terms + 1;
  A = Real(n - 2, d) * A + power;
  factor = -factor * y / (n * ln_a);
  out.error_estimate = abs(factor * Real(n - 1, d) * A);
  return out;
}

LiTable soldner_table(const Real& x_max, const StepSchedule& schedule, int max_terms) {
  long d = x_max.digits();
  if (x_max > pow(Real(10, d), 4L))
    throw std::domain_error("soldner_table: x_max must be <= 10^4");
  Real anchor(2, d);
  if (x_max < 2) throw std::domain_error("soldner_table: x_max must be >= 2");

  std::vector<Real> points;
  if (schedule.kind == StepSchedule::Kind::Unit) {
    for (Real p = anchor + 1; p <= x_max; p += 1) points.push_back(p);
  } else {
    points = schedule.points;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Real& prev = i == 0 ? anchor : points[i - 1];
      if (points[i] <= prev) throw std::domain_error("soldner_table: schedule must ascend from 2");
      if ((points[i] - prev) * 2 > prev)
        throw std::domain_error("soldner_table: schedule violates the x/a <= 1/2 step guard");
    }
  }

  LiTable table;
  Real cur = li(anchor);
  Real acc_err(0, d);
  table.rows.push_back({anchor, cur, acc_err, {}, {}, {}});
  Real at = anchor;
  for (const Real& next : points) {
    StepResult step = soldner_step(cur, at, next - at, max_terms);
    cur = step.value;
    acc_err += step.error_estimate;
    at = next;
    table.rows.push_back({at, cur, acc_err, {}, {}, {}});
  }
  return table;
}

BesselCoeffs bessel_coeffs(const Real& a, int count) {
  if (a <= 1) throw std::domain_error("bessel_coeffs: ratio must exceed 1");
  if (count < 1) throw std::domain_error("bessel_coeffs: count must be >= 1");
  long d = a.digits();
  Real ln_a = ln(a);
  BesselCoeffs bc{a, {}};
  bc.coeffs.reserve(count);
  bc.coeffs.push_back(1 / a - 1);  // A'
  Real power = ln_a;               // (ln a)^k
  for (int k = 1; k < count; ++k) {
    bc.coeffs.push_back(Real(k, d) * bc.coeffs.back() + power / a);
    power *= ln_a;
  }
  return bc;
}

StepResult bessel_step(const Real& li_prev, const Real& x_prev, const BesselCoeffs& coeffs,
                       int max_terms) {
  if (x_prev <= 1) throw std::domain_error("bessel_step: abscissa must exceed 1");
  long d = std::max(li_prev.digits(), x_prev.digits());
  int count = static_cast<int>(coeffs.coeffs.size());
  if (max_terms > 0 && max_terms < count) count = max_terms;

  // li(a x) = li(x) - a x sum_k A^(k) / ln(a x)^k
  Real x_new = coeffs.ratio * x_prev;
  Real inv_l = 1 / ln(x_new);
  Real scale = x_new * inv_l;  // a x / ln(ax)^k, advanced each term
  Real threshold = pow(Real(10, d), -(d + 4));

  StepResult out{li_prev, Real(0, d), 0, false};
  Real prev_mag(0, d);
  for (int k = 1; k <= count; ++k) {
    Real term = scale * coeffs.coeffs[k - 1];
    scale *= inv_l;
    Real mag = abs(term);
    if (k > 1 && mag > prev_mag) {
      out.error_estimate = mag;
      out.diverged = true;
      return out;
    }
    out.value -= term;
    out.terms_used = k;
    prev_mag = mag;
    if (mag < threshold * abs(out.value)) {
      out.error_estimate = mag;
      return out;
    }
  }
  // ran out of coefficients; the last term magnitude bounds what follows
  out.error_estimate = prev_mag;
  return out;
}

StepResult bessel_pow10_step(const Real& li_prev, int n, const BesselCoeffs& coeffs,
                             int max_terms) {
  if (n < 2) throw std::domain_error("bessel_pow10_step: n must be >= 2");
  if (coeffs.ratio != 10) throw std::domain_error("bessel_pow10_step: coefficients must use a = 10");
  long d = li_prev.digits();
  return bessel_step(li_prev, pow(Real(10, d), static_cast<long>(n - 1)), coeffs, max_terms);
}

LiTable bessel_table_1810(long digits) {
  const long d = digits;
  struct PrintedRow {
    long x;
    const char* li;
    long pi;  // -1 = not printed
    const char* excess;
  };
  // The 1810 letter table, transcribed verbatim. The prime counts come
  // from Vega's tables with 1 counted as a prime; the 300000 row of the
  // li column is internally consistent with its excess entry but is off
  // from the true li(300000) by 6.4766 (see VALIDATION.md).
  static const PrintedRow printed[] = {
      {1000, "177.609655", 169, "8.61"},
      {10000, "1246.137247", 1230, "16.14"},
      {100000, "9629.809041", 9593, "36.81"},
      {200000, "18036.052159", 17983, "53.05"},
      {300000, "26080.215589", 25997, "83.21"},
      {400000, "33922.621995", 33859, "63.62"},
      {1000000, "78627.549277", -1, nullptr},
  };

  const int kCoeffCount = 64;
  BesselCoeffs c10 = bessel_coeffs(Real(10, d), kCoeffCount);
  BesselCoeffs c2 = bessel_coeffs(Real(2, d), kCoeffCount);
  BesselCoeffs c3 = bessel_coeffs(Real(3, d), kCoeffCount);

  // Chain: series anchor at 1e3, decade steps to 1e4, 1e5, 1e6, and ratio
  // steps 1e5 -> {2e5, 3e5} and 2e5 -> 4e5.
  Real li_1e3 = li(Real(1000, d));
  StepResult s1e4 = bessel_pow10_step(li_1e3, 4, c10);
  StepResult s1e5 = bessel_pow10_step(s1e4.value, 5, c10);
  StepResult s1e6 = bessel_pow10_step(s1e5.value, 6, c10);
  StepResult s2e5 = bessel_step(s1e5.value, Real(100000, d), c2);
  StepResult s3e5 = bessel_step(s1e5.value, Real(100000, d), c3);
  StepResult s4e5 = bessel_step(s2e5.value, Real(200000, d), c2);

  Real e1e4 = s1e4.error_estimate;
  Real e1e5 = e1e4 + s1e5.error_estimate;
  struct Computed {
    Real value;
    Real err;
  };
  const Computed computed[] = {
      {li_1e3, Real(0, d)},
      {s1e4.value, e1e4},
      {s1e5.value, e1e5},
      {s2e5.value, e1e5 + s2e5.error_estimate},
      {s3e5.value, e1e5 + s3e5.error_estimate},
      {s4e5.value, e1e5 + s2e5.error_estimate + s4e5.error_estimate},
      {s1e6.value, e1e5 + s1e6.error_estimate},
  };

  LiTable table;
  for (int i = 0; i < 7; ++i) {
    const PrintedRow& pr = printed[i];
    LiTableRow row{Real(pr.x, d), computed[i].value, computed[i].err,
                   Real::from_string(pr.li, d),
                   pr.pi >= 0 ? std::optional<long>(pr.pi) : std::nullopt,
                   pr.excess ? std::optional<Real>(Real::from_string(pr.excess, d)) : std::nullopt};
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace logint
