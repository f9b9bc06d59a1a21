#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace rabotnov {

// Parameter triple (alpha, beta, gamma) of the generalized Rabotnov
// series.  alpha and gamma are real with alpha >= 0, gamma >= 1; beta
// may be any finite complex number.
struct RabotnovParams {
  double alpha = 0.0;
  double gamma_shape = 1.0;
  std::complex<double> beta{0.0, 0.0};

  // gamma + alpha, the scale entering every coefficient and bound.
  double shape_sum() const { return gamma_shape + alpha; }

  void validate() const;
};

enum class SeriesKind { Base, Derivative, Alexander };

// The six ratios whose real parts are bounded below:
//   FOverFm   R(z) / R_m(z)          FmOverF   R_m(z) / R(z)
//   FpOverFmp R'(z) / R_m'(z)        FmpOverFp R_m'(z) / R'(z)
//   IOverIm   I[R](z) / I[R]_m(z)    ImOverI   I[R]_m(z) / I[R](z)
enum class RatioKind { FOverFm, FmOverF, FpOverFmp, FmpOverFp, IOverIm, ImOverI };

// Maps each ratio to the series it is built from.
SeriesKind series_of(RatioKind ratio);

std::string to_string(SeriesKind kind);
std::string to_string(RatioKind ratio);

// Thrown when a series truncation cap is reached before the requested
// tolerance is met.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by ratio evaluation when the denominator is too small relative
// to the numerator; the sample must be discarded and flagged.
struct PoleProximityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a verification is requested for parameters that violate
// the hypothesis of the statement being checked.
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when every sample of a scan was pole-flagged.
struct DegenerateDenominatorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rabotnov
