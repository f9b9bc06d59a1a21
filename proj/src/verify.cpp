#include "rabotnov/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <limits>
#include <numbers>

namespace rabotnov {

int SamplingGrid::points_for(double r) const {
  const double outer = radii.back();
  return std::max(256, (int)std::lround(points_per_circle * r / outer));
}

void SamplingGrid::validate() const {
  if (radii.empty()) throw std::domain_error("SamplingGrid: radii empty");
  double prev = 0.0;
  for (double r : radii) {
    if (!(r > prev) || !(r < 1.0))
      throw std::domain_error(
          "SamplingGrid: radii must be strictly increasing in (0,1)");
    prev = r;
  }
  if (points_per_circle < 1 || refine_rounds < 0)
    throw std::domain_error("SamplingGrid: invalid point/refinement counts");
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kGoldenItersPerRound = 10;

struct CircleScan {
  double best = kInf;
  double best_theta = 0.0;
  long pole_flags = 0;
};

// Minimizes objective(z) over one circle: uniform angular sweep, then
// refine_rounds * kGoldenItersPerRound golden-section steps bracketing
// the sweep minimum.  Pole-flagged samples count as +inf.
template <typename F>
CircleScan scan_circle(double r, int npts, int refine_rounds, const F& objective) {
  CircleScan scan;
  const double two_pi = 2.0 * std::numbers::pi;

  auto eval_at = [&](double theta) {
    double v;
    try {
      v = objective(std::polar(r, theta));
    } catch (const PoleProximityError&) {
      ++scan.pole_flags;
      return kInf;
    }
    if (v < scan.best) {
      scan.best = v;
      scan.best_theta = theta;
    }
    return v;
  };

  int best_j = 0;
  double best_v = kInf;
  for (int j = 0; j < npts; ++j) {
    const double v = eval_at(two_pi * j / npts);
    if (v < best_v) {
      best_v = v;
      best_j = j;
    }
  }
  if (!std::isfinite(scan.best)) return scan;  // every sample flagged

  // Golden-section search on the bracket one grid step either side of
  // the sweep minimum.  More rounds only extend the iteration, so the
  // observed minimum is monotone in refine_rounds.
  const double step = two_pi / npts;
  double a = two_pi * best_j / npts - step;
  double b = two_pi * best_j / npts + step;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = eval_at(c);
  double fd = eval_at(d);
  for (int it = 0; it < refine_rounds * kGoldenItersPerRound; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = eval_at(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = eval_at(d);
    }
  }
  return scan;
}

bool single_threaded() {
  const char* env = std::getenv("RABOTNOV_SINGLE_THREAD");
  return env != nullptr && env[0] == '1';
}

// Runs the per-circle scans (possibly in parallel) and merges their
// minima in fixed circle order, so results are deterministic either way.
template <typename F>
VerificationCertificate scan_grid(const RabotnovParams& params,
                                  const SamplingGrid& grid,
                                  const F& objective) {
  grid.validate();
  params.validate();

  std::vector<CircleScan> scans(grid.radii.size());
  auto run = [&](size_t i) {
    return scan_circle(grid.radii[i], grid.points_for(grid.radii[i]),
                       grid.refine_rounds, objective);
  };
  if (single_threaded()) {
    for (size_t i = 0; i < grid.radii.size(); ++i) scans[i] = run(i);
  } else {
    std::vector<std::future<CircleScan>> futures;
    for (size_t i = 0; i < grid.radii.size(); ++i)
      futures.push_back(std::async(std::launch::async, run, i));
    for (size_t i = 0; i < grid.radii.size(); ++i) scans[i] = futures[i].get();
  }

  VerificationCertificate cert;
  cert.params = params;
  cert.grid = grid;
  double best = kInf;
  for (size_t i = 0; i < scans.size(); ++i) {
    cert.pole_flags += scans[i].pole_flags;
    if (scans[i].best < best) {
      best = scans[i].best;
      cert.argmin = std::polar(grid.radii[i], scans[i].best_theta);
    }
  }
  if (!std::isfinite(best))
    throw DegenerateDenominatorError(
        "estimate_infimum: every sample was pole-flagged");
  cert.observed_infimum = best;
  return cert;
}

}  // namespace

VerificationCertificate estimate_infimum(const RabotnovParams& params,
                                         RatioKind ratio, int m,
                                         const SamplingGrid& grid) {
  if (m < 0) throw std::domain_error("estimate_infimum: m must be >= 0");
  CoefficientTable table(params);
  auto cert = scan_grid(params, grid, [&](std::complex<double> z) {
    return eval_ratio(table, ratio, m, z).real();
  });
  cert.quantity = to_string(ratio);
  cert.m = m;
  return cert;
}

VerificationCertificate verify_theorem(const RabotnovParams& params,
                                       RatioKind ratio, int m,
                                       const SamplingGrid& grid) {
  const BoundResult tb = theorem_bound(params, ratio);
  if (!tb.hypothesis_ok)
    throw HypothesisError("verify_theorem: hypothesis fails: " +
                          tb.hypothesis_text);
  VerificationCertificate cert = estimate_infimum(params, ratio, m, grid);
  cert.bound = tb.bound;
  cert.bound_is_upper = false;
  cert.margin = cert.observed_infimum - cert.bound;
  cert.pass = cert.margin >= -kMarginTol;
  return cert;
}

VerificationCertificate verify_lemma2(const RabotnovParams& params,
                                      SeriesKind kind,
                                      const SamplingGrid& grid) {
  const BoundResult lb = lemma2_bound(params, kind);
  if (!lb.hypothesis_ok)
    throw HypothesisError("verify_lemma2: hypothesis fails (strict): " +
                          lb.hypothesis_text);
  CoefficientTable table(params);
  // Maximize the modulus by minimizing its negative.
  VerificationCertificate cert = scan_grid(params, grid, [&](std::complex<double> z) {
    return -std::abs(eval_series(table, kind, z).value);
  });
  cert.observed_infimum = -cert.observed_infimum;  // the supremum
  switch (kind) {
    case SeriesKind::Base: cert.quantity = "|R|"; break;
    case SeriesKind::Derivative: cert.quantity = "|R'|"; break;
    default: cert.quantity = "|I[R]|"; break;
  }
  cert.bound = lb.bound;
  cert.bound_is_upper = true;
  cert.margin = cert.bound - cert.observed_infimum;
  cert.pass = cert.margin >= -kMarginTol;
  return cert;
}

VerificationCertificate verify_univalence_remark(const RabotnovParams& params,
                                                 const SamplingGrid& grid) {
  const BoundResult tb = theorem_bound(params, RatioKind::FpOverFmp);
  if (!tb.hypothesis_ok)
    throw HypothesisError("verify_univalence_remark: hypothesis fails: " +
                          tb.hypothesis_text);
  CoefficientTable table(params);
  VerificationCertificate cert = scan_grid(params, grid, [&](std::complex<double> z) {
    return eval_series(table, SeriesKind::Derivative, z).value.real();
  });
  cert.quantity = "Re{R'}";
  cert.bound = tb.bound;
  cert.bound_is_upper = false;
  cert.margin = cert.observed_infimum - cert.bound;
  cert.pass = cert.margin >= -kMarginTol;
  return cert;
}

std::vector<VerificationCertificate> corollary_table(const SamplingGrid& grid) {
  const RabotnovParams c1{0.0, 1.0, {-1.0 / 3.0, 0.0}};
  const RabotnovParams c2{1.0, 1.0, {0.5, 0.0}};
  const RabotnovParams c3{1.0, 1.0, {-0.25, 0.0}};
  const RabotnovParams c4{1.0, 1.0, {1.0, 0.0}};

  const std::vector<std::pair<RabotnovParams, RatioKind>> rows = {
      {c1, RatioKind::FOverFm},   {c1, RatioKind::FmOverF},
      {c1, RatioKind::FpOverFmp}, {c1, RatioKind::FmpOverFp},
      {c2, RatioKind::FOverFm},   {c2, RatioKind::FmOverF},
      {c2, RatioKind::FpOverFmp}, {c2, RatioKind::FmpOverFp},
      {c3, RatioKind::FOverFm},   {c3, RatioKind::FmOverF},
      {c3, RatioKind::FpOverFmp}, {c3, RatioKind::FmpOverFp},
      {c4, RatioKind::FOverFm},   {c4, RatioKind::FmOverF},
  };

  std::vector<VerificationCertificate> certs;
  certs.reserve(rows.size());
  for (const auto& [params, ratio] : rows)
    certs.push_back(verify_theorem(params, ratio, 0, grid));
  return certs;
}

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

nlohmann::json to_json(const VerificationCertificate& cert) {
  return nlohmann::json{
      {"alpha", cert.params.alpha},
      {"gamma", cert.params.gamma_shape},
      {"beta_re", cert.params.beta.real()},
      {"beta_im", cert.params.beta.imag()},
      {"quantity", cert.quantity},
      {"m", cert.m},
      {"bound", cert.bound},
      {"bound_is_upper", cert.bound_is_upper},
      {"observed_infimum", cert.observed_infimum},
      {"argmin_re", cert.argmin.real()},
      {"argmin_im", cert.argmin.imag()},
      {"margin", cert.margin},
      {"pole_flags", cert.pole_flags},
      {"radii", cert.grid.radii},
      {"points_per_circle", cert.grid.points_per_circle},
      {"refine_rounds", cert.grid.refine_rounds},
      {"pass", cert.pass},
  };
}

std::string csv_header() {
  return "alpha,gamma,beta_re,beta_im,quantity,m,bound,bound_is_upper,"
         "observed_infimum,argmin_re,argmin_im,margin,pole_flags,radii,"
         "points_per_circle,refine_rounds,pass";
}

std::string to_csv_row(const VerificationCertificate& cert) {
  std::string radii;
  for (size_t i = 0; i < cert.grid.radii.size(); ++i) {
    if (i) radii += ';';
    radii += fmt17(cert.grid.radii[i]);
  }
  std::string row;
  row += fmt17(cert.params.alpha) + ",";
  row += fmt17(cert.params.gamma_shape) + ",";
  row += fmt17(cert.params.beta.real()) + ",";
  row += fmt17(cert.params.beta.imag()) + ",";
  row += cert.quantity + ",";
  row += std::to_string(cert.m) + ",";
  row += fmt17(cert.bound) + ",";
  row += std::string(cert.bound_is_upper ? "1" : "0") + ",";
  row += fmt17(cert.observed_infimum) + ",";
  row += fmt17(cert.argmin.real()) + ",";
  row += fmt17(cert.argmin.imag()) + ",";
  row += fmt17(cert.margin) + ",";
  row += std::to_string(cert.pole_flags) + ",";
  row += radii + ",";
  row += std::to_string(cert.grid.points_per_circle) + ",";
  row += std::to_string(cert.grid.refine_rounds) + ",";
  row += cert.pass ? "1" : "0";
  return row;
}

}  // namespace rabotnov
