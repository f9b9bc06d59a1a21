#include "rabotnov/coeffs.hpp"

#include <cmath>

namespace rabotnov {

void RabotnovParams::validate() const {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw std::domain_error("RabotnovParams: alpha must be finite and >= 0");
  if (!std::isfinite(gamma_shape) || gamma_shape < 1.0)
    throw std::domain_error("RabotnovParams: gamma must be finite and >= 1");
  if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag()))
    throw std::domain_error("RabotnovParams: beta must be finite");
}

SeriesKind series_of(RatioKind ratio) {
  switch (ratio) {
    case RatioKind::FOverFm:
    case RatioKind::FmOverF:
      return SeriesKind::Base;
    case RatioKind::FpOverFmp:
    case RatioKind::FmpOverFp:
      return SeriesKind::Derivative;
    default:
      return SeriesKind::Alexander;
  }
}

std::string to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::Base: return "base";
    case SeriesKind::Derivative: return "derivative";
    default: return "alexander";
  }
}

std::string to_string(RatioKind ratio) {
  switch (ratio) {
    case RatioKind::FOverFm: return "F/F_m";
    case RatioKind::FmOverF: return "F_m/F";
    case RatioKind::FpOverFmp: return "F'/F_m'";
    case RatioKind::FmpOverFp: return "F_m'/F'";
    case RatioKind::IOverIm: return "I/I_m";
    default: return "I_m/I";
  }
}

namespace {

// Lanczos coefficients for g = 607/128, 15 terms (Godfrey/Pugh).
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};
constexpr double kHalfLogTwoPi = 0.91893853320467274178;

double log_gamma_lanczos(double x) {
  // valid for x >= 0.5
  double sum = kLanczos[0];
  for (int k = 1; k < 15; ++k) sum += kLanczos[k] / (x + k - 1);
  const double base = x + kLanczosG - 0.5;
  return kHalfLogTwoPi + (x - 0.5) * std::log(base) - base + std::log(sum);
}

}  // namespace

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0)
    throw std::domain_error("log_gamma: argument must be finite and > 0");
  if (x == 1.0 || x == 2.0) return 0.0;
  if (x >= 0.5) return log_gamma_lanczos(x);
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  return std::log(M_PI / std::sin(M_PI * x)) - log_gamma_lanczos(1.0 - x);
}

Coefficient coefficient(const RabotnovParams& params, int n) {
  params.validate();
  if (n < 1) throw std::domain_error("coefficient: n must be >= 1");

  Coefficient c;
  c.index = n;
  const double s = params.shape_sum();
  const double abs_beta = std::abs(params.beta);
  if (abs_beta == 0.0) return c;  // value 0, majorant 0

  const double log_abs =
      n * std::log(abs_beta) + log_gamma(s) - log_gamma(s * (n + 1));
  const double phase = n * std::arg(params.beta);
  c.value = std::polar(std::exp(log_abs), phase);
  c.magnitude_majorant =
      std::exp(n * std::log(abs_beta) - n * std::log(s) - log_gamma(n + 1.0));
  return c;
}

std::complex<double> weighted_coefficient(const RabotnovParams& params, int n,
                                          SeriesKind kind) {
  const std::complex<double> a = coefficient(params, n).value;
  switch (kind) {
    case SeriesKind::Base: return a;
    case SeriesKind::Derivative: return a * double(n + 1);
    default: return a / double(n + 1);
  }
}

double lemma1_margin(double alpha, double gamma_shape, int n) {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw std::domain_error("lemma1_margin: alpha must be >= 0");
  if (!std::isfinite(gamma_shape) || gamma_shape < 1.0)
    throw std::domain_error("lemma1_margin: gamma must be >= 1");
  if (n < 1) throw std::domain_error("lemma1_margin: n must be >= 1");

  const double s = gamma_shape + alpha;
  return log_gamma(s * n) -
         ((n - 1) * std::log(s) + log_gamma(double(n)) + log_gamma(s));
}

namespace {

// Bound on sum_{n >= M+1} x^n / n!, defined for M >= -1 (M = -1 covers
// the whole exponential series).
double exp_tail_bound(double x, int M) {
  if (x == 0.0) return 0.0;
  if (M < 0) return std::exp(x);
  const double head =
      std::exp((M + 1) * std::log(x) - log_gamma(double(M + 2)));
  if (x < M + 2) return head / (1.0 - x / (M + 2));
  return head * std::exp(x);
}

}  // namespace

double tail_majorant(const RabotnovParams& params, int N, SeriesKind kind) {
  params.validate();
  if (N < 0) throw std::domain_error("tail_majorant: N must be >= 0");

  const double x = std::abs(params.beta) / params.shape_sum();
  switch (kind) {
    case SeriesKind::Base:
    case SeriesKind::Alexander:
      // |A_n| / (n+1) <= |A_n| <= x^n / n!
      return exp_tail_bound(x, N);
    default:
      // (n+1) x^n / n! = x^n / (n-1)! + x^n / n!
      return x * exp_tail_bound(x, N - 1) + exp_tail_bound(x, N);
  }
}

CoefficientTable::CoefficientTable(RabotnovParams params)
    : params_(params) {
  params_.validate();
}

Coefficient CoefficientTable::at(int n) const {
  if (n < 1 || n > kTruncationCap)
    throw std::domain_error("CoefficientTable: index out of range");
  std::lock_guard<std::mutex> lock(mutex_);
  while ((int)cache_.size() < n)
    cache_.push_back(coefficient(params_, (int)cache_.size() + 1));
  return cache_[n - 1];
}

std::complex<double> CoefficientTable::weighted(int n, SeriesKind kind) const {
  const std::complex<double> a = at(n).value;
  switch (kind) {
    case SeriesKind::Base: return a;
    case SeriesKind::Derivative: return a * double(n + 1);
    default: return a / double(n + 1);
  }
}

}  // namespace rabotnov
