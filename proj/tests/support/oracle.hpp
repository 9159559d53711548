#pragma once

// Independent oracles for the regression and property tests. Everything in
// here recomputes the defining formulas directly in long double, on purpose
// sharing no code with the implementation under test. f_cdf is checked
// against adaptive Simpson quadrature of the F density rather than the
// incomplete beta route the library uses.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace test_oracle {

inline long double mean(std::span<const double> xs) {
  long double s = 0.0L;
  for (double x : xs) s += x;
  return s / static_cast<long double>(xs.size());
}

inline long double pop_std(std::span<const double> xs) {
  const long double m = mean(xs);
  long double s = 0.0L;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<long double>(xs.size()));
}

inline long double snr_smaller(std::span<const double> xs) {
  long double s = 0.0L;
  for (double x : xs) s += static_cast<long double>(x) * x;
  return -10.0L * std::log10(s / static_cast<long double>(xs.size()));
}

inline long double snr_larger(std::span<const double> xs) {
  long double s = 0.0L;
  for (double x : xs) s += 1.0L / (static_cast<long double>(x) * x);
  return -10.0L * std::log10(s / static_cast<long double>(xs.size()));
}

inline long double snr_nominal(std::span<const double> xs, double target) {
  long double s = 0.0L;
  for (double x : xs) s += (static_cast<long double>(x) - target) * (x - target);
  return -10.0L * std::log10(s / static_cast<long double>(xs.size()));
}

inline std::vector<long double> normalize_larger(std::span<const double> xs) {
  long double lo = xs[0], hi = xs[0];
  for (double x : xs) {
    lo = std::min<long double>(lo, x);
    hi = std::max<long double>(hi, x);
  }
  std::vector<long double> out;
  for (double x : xs) out.push_back((x - lo) / (hi - lo));
  return out;
}

// Grey coefficient for normalized entry x with global dmin/dmax.
inline long double grc(long double x, long double rho, long double dmin, long double dmax) {
  const long double d = std::fabs(1.0L - x);
  return (dmin + rho * dmax) / (d + rho * dmax);
}

// Brute-force one-factor sum of squares: group the response by the level the
// factor takes in each run (levels 1-based in `column`).
inline long double anova_ss(std::span<const double> response, std::span<const int> column,
                            int level_count) {
  const long double grand = mean(response);
  long double ss = 0.0L;
  for (int lv = 1; lv <= level_count; ++lv) {
    long double sum = 0.0L;
    int n = 0;
    for (std::size_t i = 0; i < response.size(); ++i)
      if (column[i] == lv) {
        sum += response[i];
        ++n;
      }
    if (n == 0) continue;
    const long double lm = sum / n;
    ss += n * (lm - grand) * (lm - grand);
  }
  return ss;
}

inline long double total_ss(std::span<const double> response) {
  const long double grand = mean(response);
  long double ss = 0.0L;
  for (double x : response) ss += (x - grand) * (x - grand);
  return ss;
}

// --- F distribution CDF by quadrature -------------------------------------

namespace detail {

inline long double f_pdf(long double x, long double d1, long double d2) {
  if (x <= 0.0L) return 0.0L;
  const long double ln_beta = std::lgamma(d1 / 2.0L) + std::lgamma(d2 / 2.0L) -
                              std::lgamma((d1 + d2) / 2.0L);
  const long double ln = (d1 / 2.0L) * std::log(d1 / d2) + (d1 / 2.0L - 1.0L) * std::log(x) -
                         ((d1 + d2) / 2.0L) * std::log1p(d1 * x / d2) - ln_beta;
  return std::exp(ln);
}

template <typename F>
long double adaptive_simpson(F f, long double a, long double b, long double fa, long double fm,
                             long double fb, long double whole, long double tol, int depth) {
  const long double m = (a + b) / 2.0L;
  const long double lm = (a + m) / 2.0L, rm = (m + b) / 2.0L;
  const long double flm = f(lm), frm = f(rm);
  const long double left = (m - a) / 6.0L * (fa + 4.0L * flm + fm);
  const long double right = (b - m) / 6.0L * (fm + 4.0L * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) < 15.0L * tol)
    return left + right + (left + right - whole) / 15.0L;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0L, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0L, depth - 1);
}

template <typename F>
long double integrate(F f, long double a, long double b, long double tol) {
  const long double m = (a + b) / 2.0L;
  const long double fa = f(a), fm = f(m), fb = f(b);
  const long double whole = (b - a) / 6.0L * (fa + 4.0L * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

}  // namespace detail

// CDF of F(d1, d2) at x via quadrature with the substitution x = u^2, which
// removes the integrable singularity at 0 when d1 == 1.
inline long double f_cdf_quadrature(double x, int d1, int d2) {
  if (x <= 0.0) return 0.0L;
  const long double a = static_cast<long double>(d1);
  const long double b = static_cast<long double>(d2);
  auto g = [&](long double u) { return 2.0L * u * detail::f_pdf(u * u, a, b); };
  return detail::integrate(g, 0.0L, std::sqrt(static_cast<long double>(x)), 1e-12L);
}

}  // namespace test_oracle
