#pragma once

#include <string>

#include "rabotnov/params.hpp"

namespace rabotnov {

struct BoundResult {
  double bound = 0.0;
  bool hypothesis_ok = false;
  std::string hypothesis_text;
  // false: lower bound on Re{ratio}; true: upper bound on a modulus.
  bool is_upper = false;
};

// Lower bound on Re{ratio} over the unit disk.  The hypothesis is
// non-strict; the value is computed even when it fails so callers can
// probe near the boundary.
//   F/F_m:   (2s - 3|b|) / (2s - |b|)   needs 2s >= 3|b|
//   F_m/F:   (2s - |b|) / (2s + |b|)    needs 2s >= 3|b|
//   F'/F_m': (s - 3|b|) / (s - |b|)     needs s >= 3|b|
//   F_m'/F': (s - |b|) / (s + |b|)      needs s >= 3|b|
//   I/I_m:   (2s - 2|b|) / (2s - |b|)   needs s >= |b|
//   I_m/I:   (2s - |b|) / (2s)          needs s >= |b|
// with s = gamma + alpha, b = beta.
BoundResult theorem_bound(const RabotnovParams& params, RatioKind ratio);

// Upper bound on the modulus of the series over the unit disk; the
// hypothesis is strict, so equality yields hypothesis_ok = false.
//   |R|     <= (2s + |b|) / (2s - |b|)  needs 2s > |b|
//   |R'|    <= (s + |b|) / (s - |b|)    needs s > |b|
//   |I[R]|  <= 2s / (2s - |b|)          needs 2s > |b|
BoundResult lemma2_bound(const RabotnovParams& params, SeriesKind kind);

}  // namespace rabotnov
