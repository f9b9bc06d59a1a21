#pragma once

#include <complex>
#include <mutex>
#include <vector>

#include "rabotnov/params.hpp"

namespace rabotnov {

// Series index beyond which coefficient magnitudes underflow for any
// sane parameter range; exceeding it without meeting tolerance is a
// ConvergenceError.
inline constexpr int kTruncationCap = 500;

// ln Gamma(x) for real x > 0, Lanczos approximation evaluated in log
// space.  Relative error below 1e-12 on [0.5, 500]; exact zero at
// x = 1 and x = 2.
double log_gamma(double x);

// One term of the normalized series:
//   A_n = beta^n Gamma(s) / Gamma(s (n+1)),  s = gamma + alpha,
// together with the majorant |beta|^n / (s^n n!) from the
// gamma-factorial inequality.
struct Coefficient {
  int index = 0;
  std::complex<double> value{0.0, 0.0};
  double magnitude_majorant = 0.0;
};

Coefficient coefficient(const RabotnovParams& params, int n);

// A_n weighted per series kind: 1 (Base), n+1 (Derivative),
// 1/(n+1) (Alexander).
std::complex<double> weighted_coefficient(const RabotnovParams& params, int n,
                                          SeriesKind kind);

// log Gamma(s n) - [(n-1) log s + log (n-1)! + log Gamma(s)], s = gamma
// + alpha.  Nonnegative for alpha >= 0, gamma >= 1 by the
// gamma-factorial inequality; exactly 0 when s = 1.
double lemma1_margin(double alpha, double gamma_shape, int n);

// Upper bound on the weighted-coefficient tail
// sum_{n > N} |weighted_coefficient(n, kind)|, built from the
// factorial majorant x^n / n! with x = |beta| / (gamma + alpha).
double tail_majorant(const RabotnovParams& params, int N, SeriesKind kind);

// Append-only coefficient cache for one parameter triple.  Lazily
// extends under a mutex so concurrent readers see a consistent prefix.
class CoefficientTable {
 public:
  explicit CoefficientTable(RabotnovParams params);

  const RabotnovParams& params() const { return params_; }

  // n >= 1, n <= kTruncationCap.
  Coefficient at(int n) const;
  std::complex<double> weighted(int n, SeriesKind kind) const;

 private:
  RabotnovParams params_;
  mutable std::mutex mutex_;
  mutable std::vector<Coefficient> cache_;  // cache_[k] holds A_{k+1}
};

}  // namespace rabotnov
