#include "rabotnov/functions.hpp"

#include <cmath>

namespace rabotnov {

RabotnovParams special_case_params(SpecialCase c) {
  switch (c) {
    case SpecialCase::ExpCase: return {0.0, 1.0, {-1.0 / 3.0, 0.0}};
    case SpecialCase::SinhHalfCase: return {1.0, 1.0, {0.5, 0.0}};
    case SpecialCase::SinQuarterCase: return {1.0, 1.0, {-0.25, 0.0}};
    case SpecialCase::SinhOneCase: return {1.0, 1.0, {1.0, 0.0}};
    default: return {1.0, 1.0, {2.0, 0.0}};
  }
}

EvalResult eval_series(const CoefficientTable& table, SeriesKind kind,
                       std::complex<double> z, double tol) {
  if (tol <= 0.0) throw std::domain_error("eval_series: tol must be > 0");
  const double az = std::abs(z);
  if (az > kMaxSeriesRadius)
    throw std::domain_error("eval_series: |z| must be <= 1 - 1e-6");

  const bool derivative = (kind == SeriesKind::Derivative);
  if (z == std::complex<double>(0.0, 0.0))
    return {derivative ? std::complex<double>(1.0) : std::complex<double>(0.0),
            0, 0.0};

  std::complex<double> acc = derivative ? std::complex<double>(1.0) : z;
  std::complex<double> zpow = 1.0;  // z^N
  for (int N = 0; N <= kTruncationCap; ++N) {
    const double factor = derivative ? std::abs(zpow) : std::abs(zpow) * az;
    const double tail = tail_majorant(table.params(), N, kind) * factor;
    if (tail <= tol) return {acc, N, tail};
    if (N == kTruncationCap) break;
    const int n = N + 1;
    zpow *= z;  // z^n
    acc += table.weighted(n, kind) * (derivative ? zpow : zpow * z);
  }
  throw ConvergenceError("eval_series: truncation cap exceeded");
}

EvalResult eval_series(const RabotnovParams& params, SeriesKind kind,
                       std::complex<double> z, double tol) {
  return eval_series(CoefficientTable(params), kind, z, tol);
}

std::complex<double> eval_partial_sum(const CoefficientTable& table,
                                      SeriesKind kind, int m,
                                      std::complex<double> z) {
  if (m < 0) throw std::domain_error("eval_partial_sum: m must be >= 0");
  if (std::abs(z) > 1.0 + 1e-15)
    throw std::domain_error("eval_partial_sum: |z| must be <= 1");

  // p(z) = 1 + sum_{n=1}^m w_n z^n, Horner from the top term.
  std::complex<double> acc = 0.0;
  for (int n = m; n >= 1; --n) acc = (acc + table.weighted(n, kind)) * z;
  acc += 1.0;
  return (kind == SeriesKind::Derivative) ? acc : z * acc;
}

std::complex<double> eval_partial_sum(const RabotnovParams& params,
                                      SeriesKind kind, int m,
                                      std::complex<double> z) {
  return eval_partial_sum(CoefficientTable(params), kind, m, z);
}

std::complex<double> eval_special_case(SpecialCase c, std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0)) return 0.0;
  switch (c) {
    case SpecialCase::ExpCase:
      return z * std::exp(-z / 3.0);
    case SpecialCase::SinhHalfCase: {
      const auto s = std::sqrt(z / 2.0);
      return 2.0 * s * std::sinh(s);
    }
    case SpecialCase::SinQuarterCase: {
      const auto s = std::sqrt(z);
      return 2.0 * s * std::sin(s / 2.0);
    }
    case SpecialCase::SinhOneCase: {
      const auto s = std::sqrt(z);
      return s * std::sinh(s);
    }
    default: {  // SinhTwoCase
      const auto s = std::sqrt(2.0 * z);
      return 0.5 * s * std::sinh(s);
    }
  }
}

EvalResult eval_mittag_leffler(double a, double b, std::complex<double> w,
                               double tol) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("eval_mittag_leffler: a and b must be > 0");
  if (tol <= 0.0)
    throw std::domain_error("eval_mittag_leffler: tol must be > 0");

  const double aw = std::abs(w);
  std::complex<double> acc = 0.0;
  std::complex<double> wpow = 1.0;
  for (int k = 0; k <= kTruncationCap; ++k) {
    acc += wpow * std::exp(-log_gamma(a * k + b));
    if (aw == 0.0) return {acc, k + 1, 0.0};
    // Term-magnitude ratios are strictly decreasing (digamma is
    // increasing), so a geometric bound from the next two terms is
    // valid whenever the next ratio is below 1.
    const double m1 = std::exp((k + 1) * std::log(aw) - log_gamma(a * (k + 1) + b));
    const double m2 = std::exp((k + 2) * std::log(aw) - log_gamma(a * (k + 2) + b));
    if (m1 == 0.0) return {acc, k + 1, 0.0};
    const double q = m2 / m1;
    if (q < 1.0) {
      const double tail = m1 / (1.0 - q);
      if (tail <= tol) return {acc, k + 1, tail};
    }
    wpow *= w;
  }
  throw ConvergenceError("eval_mittag_leffler: truncation cap exceeded");
}

std::complex<double> eval_ratio(const CoefficientTable& table, RatioKind ratio,
                                int m, std::complex<double> z, double tol) {
  const SeriesKind kind = series_of(ratio);
  const std::complex<double> series = eval_series(table, kind, z, tol).value;
  const std::complex<double> psum = eval_partial_sum(table, kind, m, z);

  const bool series_on_top = (ratio == RatioKind::FOverFm ||
                              ratio == RatioKind::FpOverFmp ||
                              ratio == RatioKind::IOverIm);
  const std::complex<double> num = series_on_top ? series : psum;
  const std::complex<double> den = series_on_top ? psum : series;
  if (std::abs(den) < 1e-13 * std::max(1.0, std::abs(num)))
    throw PoleProximityError("eval_ratio: denominator too close to zero");
  return num / den;
}

std::complex<double> eval_ratio(const RabotnovParams& params, RatioKind ratio,
                                int m, std::complex<double> z, double tol) {
  return eval_ratio(CoefficientTable(params), ratio, m, z, tol);
}

}  // namespace rabotnov
