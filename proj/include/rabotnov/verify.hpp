#pragma once

#include <complex>
#include <string>
#include <vector>

#include "rabotnov/bounds.hpp"
#include "rabotnov/functions.hpp"
#include "rabotnov/params.hpp"

#include <json.hpp>

namespace rabotnov {

// Concentric-circle sampling of the unit disk.  Minima of Re{ratio}
// concentrate near the boundary (the real part is harmonic away from
// denominator zeros), so circles cluster toward |z| = 1.
struct SamplingGrid {
  std::vector<double> radii = {0.1, 0.2,  0.3,  0.4, 0.5, 0.6,
                               0.7, 0.8,  0.9,  0.99, 0.999};
  int points_per_circle = 4096;  // on the outermost circle
  int refine_rounds = 3;

  // Angular samples on circle of radius r: proportional to r with a
  // floor of 256.
  int points_for(double r) const;
  void validate() const;
};

struct VerificationCertificate {
  RabotnovParams params;
  std::string quantity;  // e.g. "F/F_m", "|R'|", "Re{R'}"
  int m = 0;
  double bound = 0.0;
  bool bound_is_upper = false;
  // Observed extremum over the grid: an infimum for ratio / Re checks,
  // a supremum for the modulus checks.
  double observed_infimum = 0.0;
  std::complex<double> argmin{0.0, 0.0};
  double margin = 0.0;  // signed so that pass <=> margin >= -1e-9
  long pole_flags = 0;
  SamplingGrid grid;
  bool pass = false;
};

inline constexpr double kMarginTol = 1e-9;

// Scans Re{eval_ratio} over the grid, discarding pole-proximate samples,
// then refines angularly around each per-circle minimum by deterministic
// golden-section search.  bound/pass are left unset.
VerificationCertificate estimate_infimum(const RabotnovParams& params,
                                         RatioKind ratio, int m,
                                         const SamplingGrid& grid);

// Certificate for one of the six lower-bound statements; refuses (throws
// HypothesisError) when the hypothesis fails.
VerificationCertificate verify_theorem(const RabotnovParams& params,
                                       RatioKind ratio, int m,
                                       const SamplingGrid& grid);

// Certificate that sup |series| over the grid stays below the modulus
// bound; hypothesis is strict.
VerificationCertificate verify_lemma2(const RabotnovParams& params,
                                      SeriesKind kind,
                                      const SamplingGrid& grid);

// Certificate that min Re{R'} over the grid stays above the m = 0
// derivative-ratio bound (which is > 0 under gamma+alpha >= 3|beta|).
VerificationCertificate verify_univalence_remark(const RabotnovParams& params,
                                                 const SamplingGrid& grid);

// The fourteen corollary inequalities, verified with m = 0 on the given
// grid (default grid by default).
std::vector<VerificationCertificate> corollary_table(
    const SamplingGrid& grid = SamplingGrid{});

// Flat serialization with stable field names; floats survive a
// round-trip at full precision.
nlohmann::json to_json(const VerificationCertificate& cert);
std::string csv_header();
std::string to_csv_row(const VerificationCertificate& cert);

}  // namespace rabotnov
