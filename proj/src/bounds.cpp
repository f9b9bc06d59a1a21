#include "rabotnov/bounds.hpp"

#include <cmath>

namespace rabotnov {

BoundResult theorem_bound(const RabotnovParams& params, RatioKind ratio) {
  params.validate();
  const double s = params.shape_sum();
  const double b = std::abs(params.beta);

  BoundResult r;
  r.is_upper = false;
  switch (ratio) {
    case RatioKind::FOverFm:
      r.bound = (2 * s - 3 * b) / (2 * s - b);
      r.hypothesis_ok = (2 * s >= 3 * b);
      r.hypothesis_text = "2(gamma+alpha) >= 3|beta|";
      break;
    case RatioKind::FmOverF:
      r.bound = (2 * s - b) / (2 * s + b);
      r.hypothesis_ok = (2 * s >= 3 * b);
      r.hypothesis_text = "2(gamma+alpha) >= 3|beta|";
      break;
    case RatioKind::FpOverFmp:
      r.bound = (s - 3 * b) / (s - b);
      r.hypothesis_ok = (s >= 3 * b);
      r.hypothesis_text = "gamma+alpha >= 3|beta|";
      break;
    case RatioKind::FmpOverFp:
      r.bound = (s - b) / (s + b);
      r.hypothesis_ok = (s >= 3 * b);
      r.hypothesis_text = "gamma+alpha >= 3|beta|";
      break;
    case RatioKind::IOverIm:
      r.bound = (2 * s - 2 * b) / (2 * s - b);
      r.hypothesis_ok = (s >= b);
      r.hypothesis_text = "gamma+alpha >= |beta|";
      break;
    default:  // ImOverI
      r.bound = (2 * s - b) / (2 * s);
      r.hypothesis_ok = (s >= b);
      r.hypothesis_text = "gamma+alpha >= |beta|";
      break;
  }
  // b = 0 collapses every formula to 1 exactly.
  if (b == 0.0) r.bound = 1.0;
  return r;
}

BoundResult lemma2_bound(const RabotnovParams& params, SeriesKind kind) {
  params.validate();
  const double s = params.shape_sum();
  const double b = std::abs(params.beta);

  BoundResult r;
  r.is_upper = true;
  switch (kind) {
    case SeriesKind::Base:
      r.bound = (2 * s + b) / (2 * s - b);
      r.hypothesis_ok = (2 * s > b);
      r.hypothesis_text = "2(gamma+alpha) > |beta|";
      break;
    case SeriesKind::Derivative:
      r.bound = (s + b) / (s - b);
      r.hypothesis_ok = (s > b);
      r.hypothesis_text = "gamma+alpha > |beta|";
      break;
    default:  // Alexander
      r.bound = (2 * s) / (2 * s - b);
      r.hypothesis_ok = (2 * s > b);
      r.hypothesis_text = "2(gamma+alpha) > |beta|";
      break;
  }
  if (b == 0.0) r.bound = 1.0;
  return r;
}

}  // namespace rabotnov
