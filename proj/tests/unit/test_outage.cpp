// Copyright 2026 The mcoutage Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <vector>

#include "doctest.h"
#include "mcoutage/error.hpp"
#include "mcoutage/outage.hpp"
#include "mcoutage/special_functions.hpp"
#include "oracles.hpp"

using namespace mcoutage;

TEST_CASE("instantaneous capacity") {
  const std::vector<double> ones{1.0, 1.0};
  CHECK(instantaneous_capacity(Combiner::kJD, ones) == doctest::Approx(2.0));
  CHECK(instantaneous_capacity(Combiner::kMRC, ones) == doctest::Approx(std::log2(3.0)));
  const std::vector<double> g{3.0, 1.0};
  CHECK(instantaneous_capacity(Combiner::kSC, g) == doctest::Approx(2.0));
  CHECK(instantaneous_capacity(Combiner::kSCo, g) == doctest::Approx(2.0));
  const std::vector<double> g2{1.0, 3.0};
  CHECK(instantaneous_capacity(Combiner::kSCo, g2) == doctest::Approx(1.0));
  const std::vector<double> neg{1.0, -0.1};
  CHECK_THROWS_AS(instantaneous_capacity(Combiner::kJD, neg), DomainError);
}

TEST_CASE("Monte-Carlo basics") {
  const std::vector<double> one{1.0};
  const auto zero = outage_monte_carlo(Combiner::kSCo, one, 0.0, 1000, 1);
  CHECK(zero.value == 0.0);
  CHECK_THROWS_AS(outage_monte_carlo(Combiner::kSCo, one, 1.0, 999, 1), DomainError);

  const auto e = outage_monte_carlo(Combiner::kSCo, one, 1.0, 2'000'000, 11);
  CHECK(e.method == OutageMethod::kMonteCarlo);
  REQUIRE(e.ci_half_width.has_value());
  CHECK(*e.sample_count == 2'000'000);
  CHECK(*e.ci_half_width ==
        doctest::Approx(1.96 * std::sqrt(e.value * (1 - e.value) / 2e6)));
  CHECK(oracle::ci_units(e.value, *e.ci_half_width, 1 - std::exp(-1.0)) < 3.0);
  CHECK_FALSE(e.low_event_count);

  const std::vector<double> high{1e4};
  const auto rare = outage_monte_carlo(Combiner::kSCo, high, 1.0, 10000, 3);
  CHECK(rare.low_event_count);
}

TEST_CASE("Monte-Carlo is independent of the worker count") {
  const std::vector<double> avg{2.0, 5.0, 1.0};
  const auto a = outage_monte_carlo(Combiner::kJD, avg, 3.0, 300000, 8, 1);
  const auto b = outage_monte_carlo(Combiner::kJD, avg, 3.0, 300000, 8, 3);
  CHECK(a.value == b.value);
  CHECK(*a.outage_events == *b.outage_events);
}

TEST_CASE("JD quadrature vs Boost nested oracle") {
  const std::vector<std::vector<double>> cases{
      {1.0}, {1.0, 1.0}, {10.0, 10.0}, {0.5, 3.0}, {2.0, 5.0, 9.0}, {100.0, 100.0, 100.0},
  };
  for (const auto& avg : cases) {
    for (double r : {0.5, 1.0, 3.0}) {
      const auto q = outage_jd_quadrature(avg, r, 1e-9);
      CAPTURE(avg.size());
      CAPTURE(r);
      CHECK(q.method == OutageMethod::kQuadrature);
      CHECK(q.value == doctest::Approx(oracle::jd_outage(avg, r)).epsilon(1e-7));
    }
  }
  const std::vector<double> one{1.0};
  CHECK(outage_jd_quadrature(one, 1.0).value ==
        doctest::Approx(1 - std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("JD quadrature vs Monte-Carlo") {
  const std::vector<double> avg{10.0, 10.0};
  const double q = outage_jd_quadrature(avg, 0.5).value;
  const auto mc = outage_monte_carlo(Combiner::kJD, avg, 0.5, 4'000'000, 21);
  CHECK(oracle::ci_units(mc.value, *mc.ci_half_width, q) < 3.0);
  // Four links: the nested Boost oracle is too slow here, so sample instead.
  const std::vector<double> four{1.0, 2.0, 3.0, 4.0};
  const double q4 = outage_jd_quadrature(four, 3.0).value;
  const auto mc4 = outage_monte_carlo(Combiner::kJD, four, 3.0, 4'000'000, 22);
  CHECK(oracle::ci_units(mc4.value, *mc4.ci_half_width, q4) < 3.0);
}

TEST_CASE("JD quadrature errors") {
  const std::vector<double> five(5, 1.0);
  CHECK_THROWS_AS(outage_jd_quadrature(five, 1.0), DomainError);
  const std::vector<double> two{1.0, 1.0};
  CHECK_THROWS_AS(outage_jd_quadrature(two, 1.0, 1e-2), DomainError);
  CHECK_THROWS_AS(outage_jd_quadrature(two, 1.0, 1e-12), DomainError);
}

TEST_CASE("JD quadrature approaches the asymptote") {
  const std::vector<double> avg(3, 100.0);
  const double q = outage_jd_quadrature(avg, 0.5).value;
  CHECK(std::abs(q / (coding_constant(3, 0.5) / 1e6) - 1.0) < 0.02);
  // Tightness whenever the asymptote is below 1e-3.
  for (int n = 1; n <= 3; ++n) {
    for (double r : {0.5, 1.0, 2.0}) {
      for (double snr_db = 0; snr_db <= 60; snr_db += 5) {
        const std::vector<double> v(static_cast<std::size_t>(n), std::pow(10.0, snr_db / 10));
        const auto a = outage_asymptotic(Combiner::kJD, v, r);
        if (a.value >= 1e-3) continue;
        const double ratio = outage_jd_quadrature(v, r).value / a.value;
        CHECK(ratio >= 0.9);
        CHECK(ratio <= 1.1);
      }
    }
  }
}

TEST_CASE("asymptotic forms") {
  const std::vector<double> ten{10.0};
  CHECK(outage_asymptotic(Combiner::kSCo, ten, 1.0).value == doctest::Approx(0.1));
  const std::vector<double> tt{10.0, 10.0};
  const auto m = outage_asymptotic(Combiner::kMRC, tt, 1.0);
  CHECK(m.value == doctest::Approx(0.005));
  CHECK(m.method == OutageMethod::kAsymptotic);
  const std::vector<double> dist{10.0, 20.0};
  CHECK(outage_asymptotic(Combiner::kMRC, dist, 1.0).method == OutageMethod::kBoundUpper);
  CHECK(outage_asymptotic(Combiner::kSC, tt, 2.0).value == doctest::Approx(0.09));
  const std::vector<double> five(5, std::pow(10.0, 0.5) / 5.0);
  const auto jd5 = outage_asymptotic(Combiner::kJD, five, 0.5);
  CHECK(jd5.value == doctest::Approx(5.568431872907e-5 / std::pow(five[0], 5)).epsilon(1e-10));
  const std::vector<double> low{0.01, 0.01};
  const auto sat = outage_asymptotic(Combiner::kJD, low, 1.0);
  CHECK(sat.value == 1.0);
  CHECK(sat.saturated);
  CHECK(std::exp(log_outage_asymptote(Combiner::kJD, low, 1.0)) ==
        doctest::Approx(coding_constant(2, 1.0) / 1e-4));
  CHECK_THROWS_AS(outage_asymptotic(Combiner::kJD, tt, 0.0), DomainError);
}

TEST_CASE("closed forms: frozen values and oracles") {
  const std::vector<double> ones{1.0, 1.0};
  CHECK(outage_exact_closed(Combiner::kSC, ones, 1.0).value ==
        doctest::Approx(0.399576400893).epsilon(1e-10));
  CHECK(outage_exact_closed(Combiner::kMRC, ones, 1.0).value ==
        doctest::Approx(0.264241117657).epsilon(1e-10));
  const std::vector<double> one{1.0};
  CHECK(outage_exact_closed(Combiner::kSCo, one, 1.0).value ==
        doctest::Approx(0.632120558829).epsilon(1e-10));
  CHECK_THROWS_AS(outage_exact_closed(Combiner::kJD, ones, 1.0), DomainError);

  for (int n = 1; n <= 6; ++n) {
    for (double avg : {0.3, 1.0, 7.0, 1e3}) {
      for (double r : {0.5, 2.0, 5.0}) {
        const std::vector<double> v(static_cast<std::size_t>(n), avg);
        CHECK(outage_exact_closed(Combiner::kMRC, v, r).value ==
              doctest::Approx(oracle::mrc_equal_outage(n, avg, r)).epsilon(1e-11));
      }
    }
  }
  const std::vector<std::vector<double>> distinct{
      {2.0, 1.0}, {1.0, 3.0, 6.0}, {0.5, 2.0, 4.0, 9.0}, {5.0, 6.0, 7.0, 8.0, 9.0}};
  for (const auto& v : distinct) {
    for (double r : {0.5, 1.5, 3.0}) {
      CHECK(classify_mrc_spacing(v) == MrcSpacing::kDistinct);
      CHECK(outage_exact_closed(Combiner::kMRC, v, r).value ==
            doctest::Approx(oracle::mrc_outage_series(v, r)).epsilon(1e-9));
    }
  }
}

TEST_CASE("MRC spacing classes and the convolution fallback") {
  const std::vector<double> eq{4.0, 4.0, 4.0};
  CHECK(classify_mrc_spacing(eq) == MrcSpacing::kEqual);
  const std::vector<double> near{1.0, 1.0 + 1e-6, 2.0};
  CHECK(classify_mrc_spacing(near) == MrcSpacing::kNearDegenerate);
  const double v = outage_exact_closed(Combiner::kMRC, near, 1.0).value;
  CHECK(v == doctest::Approx(oracle::mrc_outage_series(near, 1.0)).epsilon(1e-8));
  ExactOptions strict;
  strict.allow_convolution_fallback = false;
  CHECK_THROWS_AS(outage_exact_closed(Combiner::kMRC, near, 1.0, strict), DomainError);

  const std::vector<double> d{2.0, 1.0};
  CHECK(outage_mrc_convolution(d, 1.0).value ==
        doctest::Approx(outage_exact_closed(Combiner::kMRC, d, 1.0).value).epsilon(1e-9));
}

TEST_CASE("MRC continuity as spacing closes") {
  const double delta = 1e-3;
  const std::vector<double> spread{1.0, 1.0 + delta, 1.0 + 2 * delta};
  REQUIRE(classify_mrc_spacing(spread) == MrcSpacing::kDistinct);
  const double r = 1.0;
  const double p23 = outage_exact_closed(Combiner::kMRC, spread, r).value;
  // Against the equal-SNR form at the mean SNR.
  const std::vector<double> mean(3, 1.0 + delta);
  const double p18_mean = outage_exact_closed(Combiner::kMRC, mean, r).value;
  CHECK(std::abs(p23 - p18_mean) / p18_mean < 1e-6);
  // And first-order convergence to the equal form at 1 as delta shrinks.
  const std::vector<double> unit(3, 1.0);
  const double p18 = outage_exact_closed(Combiner::kMRC, unit, r).value;
  double prev = 1.0;
  for (double dd : {1e-2, 1e-3}) {
    const std::vector<double> s{1.0, 1.0 + dd, 1.0 + 2 * dd};
    const double err = std::abs(outage_exact_closed(Combiner::kMRC, s, r).value - p18) / p18;
    CHECK(err < prev / 5);
    prev = err;
  }
}

TEST_CASE("closed forms vs Monte-Carlo") {
  struct Case {
    Combiner c;
    std::vector<double> avg;
    double r;
  };
  const std::vector<Case> cases{{Combiner::kSC, {1.0, 1.0}, 1.0},
                                {Combiner::kMRC, {2.0, 1.0}, 1.0},
                                {Combiner::kMRC, {3.0, 3.0, 3.0}, 2.0},
                                {Combiner::kSCo, {4.0}, 1.5}};
  std::uint64_t seed = 100;
  for (const auto& k : cases) {
    const double e = outage_exact_closed(k.c, k.avg, k.r).value;
    const auto mc = outage_monte_carlo(k.c, k.avg, k.r, 2'000'000, ++seed);
    CHECK(oracle::ci_units(mc.value, *mc.ci_half_width, e) < 3.0);
  }
}

TEST_CASE("bounds") {
  const auto tse = outage_jd_lower_bound_tse(10.0, 2, 1.0);
  CHECK(tse.method == OutageMethod::kBoundLower);
  const double expect = std::pow(-std::expm1(-(std::sqrt(2.0) - 1) / 10), 2);
  CHECK(tse.value == doctest::Approx(expect).epsilon(1e-12));
  CHECK(tse.value == doctest::Approx(1.6455e-3).epsilon(1e-4));
  const std::vector<double> tt{10.0, 10.0};
  CHECK(tse.value <= outage_jd_quadrature(tt, 1.0).value);
  // N = 1 reduces to the SCo closed form.
  const std::vector<double> one{3.0};
  CHECK(outage_jd_lower_bound_tse(3.0, 1, 2.0).value ==
        doctest::Approx(outage_exact_closed(Combiner::kSCo, one, 2.0).value).epsilon(1e-14));

  const std::vector<double> d{1.0, 2.0, 3.0};
  const auto ub = mrc_simplex_bound(d, 1.0);
  CHECK(ub.method == OutageMethod::kBoundUpper);
  CHECK(ub.value == doctest::Approx(1.0 / 36.0));
  CHECK(outage_exact_closed(Combiner::kMRC, d, 1.0).value <= ub.value);
}

TEST_CASE("combiner ordering on closed forms") {
  for (double avg : {0.5, 3.0, 30.0}) {
    for (double r : {0.5, 2.0}) {
      const std::vector<double> v{avg, 2 * avg};
      const std::vector<double> first{avg};
      const double jd = outage_jd_quadrature(v, r).value;
      const double mrc = outage_exact_closed(Combiner::kMRC, v, r).value;
      const double sc = outage_exact_closed(Combiner::kSC, v, r).value;
      const double sco = outage_exact_closed(Combiner::kSCo, first, r).value;
      CHECK(jd <= mrc);
      CHECK(mrc <= sc);
      CHECK(sc <= sco);
    }
  }
}
