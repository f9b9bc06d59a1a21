#pragma once

#include <complex>

#include "rabotnov/coeffs.hpp"
#include "rabotnov/params.hpp"

namespace rabotnov {

inline constexpr double kDefaultTol = 1e-12;

// Infinite-series evaluations stay strictly inside the disk.
inline constexpr double kMaxSeriesRadius = 1.0 - 1e-6;

struct EvalResult {
  std::complex<double> value{0.0, 0.0};
  int terms_used = 0;
  double tail_bound = 0.0;  // guaranteed truncation-error bound, <= tol
};

// Closed forms the series reduces to for particular parameter triples:
//   ExpCase        (0, -1/3, 1)  z exp(-z/3)
//   SinhHalfCase   (1,  1/2, 1)  sqrt(2z) sinh sqrt(z/2)
//   SinQuarterCase (1, -1/4, 1)  2 sqrt(z) sin(sqrt(z)/2)
//   SinhOneCase    (1,  1,   1)  sqrt(z) sinh sqrt(z)
//   SinhTwoCase    (1,  2,   1)  (1/2) sqrt(2z) sinh sqrt(2z)
enum class SpecialCase {
  ExpCase,
  SinhHalfCase,
  SinQuarterCase,
  SinhOneCase,
  SinhTwoCase,
};

RabotnovParams special_case_params(SpecialCase c);

// Truncated series for the chosen kind:
//   Base:       z + sum A_n z^{n+1}
//   Derivative: 1 + sum (n+1) A_n z^n
//   Alexander:  z + sum A_n / (n+1) z^{n+1}
// Requires |z| <= 1 - 1e-6; the tail bound is certified <= tol.
EvalResult eval_series(const RabotnovParams& params, SeriesKind kind,
                       std::complex<double> z, double tol = kDefaultTol);
EvalResult eval_series(const CoefficientTable& table, SeriesKind kind,
                       std::complex<double> z, double tol = kDefaultTol);

// m-th partial sum, exact Horner evaluation from the highest term.
// Being a polynomial it accepts |z| <= 1.
std::complex<double> eval_partial_sum(const RabotnovParams& params,
                                      SeriesKind kind, int m,
                                      std::complex<double> z);
std::complex<double> eval_partial_sum(const CoefficientTable& table,
                                      SeriesKind kind, int m,
                                      std::complex<double> z);

// Closed form for the given special case, principal branch of sqrt;
// all five extend continuously with value 0 at z = 0.
std::complex<double> eval_special_case(SpecialCase c, std::complex<double> z);

// Two-parameter Mittag-Leffler function sum_{k>=0} w^k / Gamma(a k + b).
EvalResult eval_mittag_leffler(double a, double b, std::complex<double> w,
                               double tol = kDefaultTol);

// One of the six theorem ratios.  Throws PoleProximityError when the
// denominator is below 1e-13 * max(1, |numerator|).
std::complex<double> eval_ratio(const RabotnovParams& params, RatioKind ratio,
                                int m, std::complex<double> z,
                                double tol = kDefaultTol);
std::complex<double> eval_ratio(const CoefficientTable& table, RatioKind ratio,
                                int m, std::complex<double> z,
                                double tol = kDefaultTol);

}  // namespace rabotnov
