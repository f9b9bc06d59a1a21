#include <cmath>
#include <complex>

#include <doctest.h>

#include "rabotnov/coeffs.hpp"

using namespace rabotnov;
using std::complex;

#include "lgamma_oracle.inc"

TEST_CASE("log_gamma known values") {
  CHECK(log_gamma(1.0) == 0.0);
  CHECK(log_gamma(2.0) == 0.0);
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  // 40-digit oracle value for ln Gamma(2.5)
  CHECK(log_gamma(2.5) ==
        doctest::Approx(0.28468287047291915963249466968270192432).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-3.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(std::nan("")), std::domain_error);
}

TEST_CASE("log_gamma matches the high-precision oracle grid") {
  for (const auto& p : kLogGammaOracle) {
    const double got = log_gamma(p.x);
    CHECK(std::abs(got - p.lg) <= 1e-12 * std::abs(p.lg));
  }
}

TEST_CASE("coefficient examples") {
  // (0, -1/3, 1), n=2: (-1/3)^2 Gamma(1)/Gamma(3) = 1/18
  const RabotnovParams exp_case{0.0, 1.0, {-1.0 / 3.0, 0.0}};
  const Coefficient a2 = coefficient(exp_case, 2);
  CHECK(a2.value.real() == doctest::Approx(1.0 / 18.0).epsilon(1e-13));
  CHECK(std::abs(a2.value.imag()) < 1e-15);

  const RabotnovParams zero_beta{2.0, 3.0, {0.0, 0.0}};
  CHECK(coefficient(zero_beta, 1).value == complex<double>(0.0, 0.0));

  // (1, 1/2, 1), n=3: (1/8) Gamma(2)/Gamma(8) = 1/40320
  const RabotnovParams half{1.0, 1.0, {0.5, 0.0}};
  const Coefficient a3 = coefficient(half, 3);
  CHECK(a3.value.real() == doctest::Approx(1.0 / 40320.0).epsilon(1e-12));
}

TEST_CASE("coefficient validates params") {
  CHECK_THROWS_AS(coefficient({-1.0, 1.0, {0.5, 0.0}}, 1), std::domain_error);
  CHECK_THROWS_AS(coefficient({0.0, 0.5, {0.5, 0.0}}, 1), std::domain_error);
  CHECK_THROWS_AS(coefficient({0.0, 1.0, {0.5, 0.0}}, 0), std::domain_error);
}

TEST_CASE("weighted_coefficient applies series weights") {
  const RabotnovParams p{0.0, 1.0, {-1.0 / 3.0, 0.0}};
  const complex<double> a1 = coefficient(p, 1).value;
  CHECK(weighted_coefficient(p, 1, SeriesKind::Base) == a1);
  CHECK(weighted_coefficient(p, 1, SeriesKind::Derivative).real() ==
        doctest::Approx(-2.0 / 3.0).epsilon(1e-14));
  CHECK(weighted_coefficient(p, 1, SeriesKind::Alexander).real() ==
        doctest::Approx(-1.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("lemma1_margin examples and domain") {
  CHECK(lemma1_margin(0.0, 1.0, 1) == 0.0);
  for (int n = 1; n <= 50; ++n) CHECK(lemma1_margin(0.0, 1.0, n) == 0.0);
  // (1, 1, 3): log Gamma(6) - [2 log 2 + log 2 + 0] = log 15
  CHECK(lemma1_margin(1.0, 1.0, 3) ==
        doctest::Approx(std::log(15.0)).epsilon(1e-13));
  CHECK_THROWS_AS(lemma1_margin(-0.5, 1.0, 1), std::domain_error);
  CHECK_THROWS_AS(lemma1_margin(0.0, 0.9, 1), std::domain_error);
}

TEST_CASE("lemma1_margin nonnegative on the parameter grid") {
  for (double alpha : {0.0, 0.5, 1.0, 2.0, 5.0})
    for (double gamma : {1.0, 1.5, 2.0, 10.0})
      for (int n = 1; n <= 50; ++n)
        CHECK(lemma1_margin(alpha, gamma, n) >= -1e-12);
}

TEST_CASE("coefficient magnitude never exceeds its majorant") {
  const RabotnovParams sets[] = {
      {0.0, 1.0, {-1.0 / 3.0, 0.0}}, {1.0, 1.0, {0.5, 0.0}},
      {1.0, 1.0, {2.0, 0.0}},        {0.5, 1.5, {1.0, -2.0}},
      {3.0, 2.0, {-4.0, 3.0}},       {0.0, 10.0, {9.0, 0.5}},
  };
  for (const auto& p : sets)
    for (int n = 1; n <= 60; ++n) {
      const Coefficient c = coefficient(p, n);
      CHECK(std::abs(c.value) <= c.magnitude_majorant + 1e-15);
    }
}

TEST_CASE("tail_majorant dominates the truncated true tail") {
  const RabotnovParams sets[] = {
      {0.0, 1.0, {1.0, 0.0}},       {0.0, 1.0, {-1.0 / 3.0, 0.0}},
      {1.0, 1.0, {2.0, 0.0}},       {0.5, 1.5, {1.0, -2.0}},
      {0.0, 2.0, {1.0, 0.0}},       {2.0, 1.0, {-3.0, 4.0}},
  };
  for (const auto& p : sets)
    for (int N : {0, 1, 5, 10, 25})
      for (SeriesKind kind :
           {SeriesKind::Base, SeriesKind::Derivative, SeriesKind::Alexander}) {
        double true_tail = 0.0;
        for (int n = N + 1; n <= N + 200; ++n)
          true_tail += std::abs(weighted_coefficient(p, n, kind));
        CHECK(tail_majorant(p, N, kind) >= true_tail);
      }
}

TEST_CASE("tail_majorant examples") {
  const RabotnovParams zero{0.0, 1.0, {0.0, 0.0}};
  CHECK(tail_majorant(zero, 0, SeriesKind::Base) == 0.0);
  CHECK(tail_majorant(zero, 7, SeriesKind::Derivative) == 0.0);

  // x = 1, N = 10: bound about 2.733e-8 and above the true tail
  const RabotnovParams unit{0.0, 1.0, {1.0, 0.0}};
  const double bound = tail_majorant(unit, 10, SeriesKind::Base);
  CHECK(bound == doctest::Approx(2.7329572784118245e-08).epsilon(1e-10));
  double true_tail = std::exp(1.0);
  double fact = 1.0;
  for (int n = 0; n <= 10; ++n) {
    if (n > 0) fact *= n;
    true_tail -= 1.0 / fact;
  }
  CHECK(bound >= true_tail);

  // x = 0.5, N = 0: 0.5 / (1 - 0.25) = 2/3, true tail e^0.5 - 1
  const RabotnovParams half{0.0, 1.0, {0.5, 0.0}};
  CHECK(tail_majorant(half, 0, SeriesKind::Base) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(tail_majorant(half, 0, SeriesKind::Base) >= std::exp(0.5) - 1.0);
}

TEST_CASE("coefficient table matches direct computation") {
  const RabotnovParams p{0.5, 1.5, {1.0, -2.0}};
  CoefficientTable table(p);
  for (int n : {3, 1, 7, 2}) {  // out-of-order access
    CHECK(table.at(n).value == coefficient(p, n).value);
    CHECK(table.weighted(n, SeriesKind::Derivative) ==
          weighted_coefficient(p, n, SeriesKind::Derivative));
  }
  CHECK_THROWS_AS(table.at(0), std::domain_error);
  CHECK_THROWS_AS(table.at(kTruncationCap + 1), std::domain_error);
}
