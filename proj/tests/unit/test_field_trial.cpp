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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "doctest.h"
#include "mcoutage/error.hpp"
#include "mcoutage/field_trial.hpp"
#include "mcoutage/link_model.hpp"
#include "mcoutage/outage.hpp"
#include "mcoutage/special_functions.hpp"
#include "oracles.hpp"

using namespace mcoutage;

namespace {
SnrTrace parse(const std::string& text) {
  std::istringstream in(text);
  return parse_trace(in, "mem");
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const TraceFormatError& e) {
    return e.line();
  }
  return 0;
}
}  // namespace

TEST_CASE("trace parsing") {
  const auto t = parse(
      "# comment\n"
      "measurement_id,bs_id,avg_snr_db\n"
      "1,a,10.5\n"
      "\n"
      "# another\n"
      "1,b,3\n"
      "2,a,-4.25\n");
  CHECK(t.size() == 3);
  CHECK(t.measurement_ids() == std::vector<long long>{1, 2});
  CHECK(t.entries(1).size() == 2);
  CHECK(t.entries(7).empty());
  CHECK(t.records()[2].avg_snr_db == -4.25);
}

TEST_CASE("trace errors carry line numbers") {
  CHECK(error_line("measurement_id,bs_id,avg_snr_db\n1,a,x\n") == 2);
  CHECK(error_line("measurement_id,bs_id,avg_snr_db\n1,a,1\n1,a,2\n") == 3);
  CHECK(error_line("measurement_id,bs_id,avg_snr_db\n1,a\n") == 2);
  CHECK(error_line("id,bs,snr\n1,a,1\n") == 1);
  CHECK(error_line("# only a comment\n") == 1);
  CHECK(error_line("measurement_id,bs_id,avg_snr_db\n") == 1);
  CHECK(error_line("measurement_id,bs_id,avg_snr_db\nx,a,1\n") == 2);
  CHECK_THROWS_AS(parse("measurement_id,bs_id,avg_snr_db\n1,a,1.0,2\n"), IoError);
}

TEST_CASE("missing trace file") {
  try {
    load_trace("/nonexistent/dir/trace.csv");
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("/nonexistent/dir/trace.csv") != std::string::npos);
  }
}

TEST_CASE("write and reload round trip") {
  const auto t = synthesize_trace(50, 16, {}, 7);
  std::ostringstream out;
  write_trace(t, out);
  const auto back = parse(out.str());
  REQUIRE(back.size() == t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(back.records()[i].measurement_id == t.records()[i].measurement_id);
    CHECK(back.records()[i].bs_id == t.records()[i].bs_id);
    CHECK(back.records()[i].avg_snr_db == t.records()[i].avg_snr_db);
  }
  std::ostringstream again;
  write_trace(back, again);
  CHECK(again.str() == out.str());
}

TEST_CASE("strongest links") {
  const auto t = parse(
      "measurement_id,bs_id,avg_snr_db\n"
      "1,c,10\n1,a,20\n1,b,10\n1,d,0\n");
  const auto top = strongest_links(t, 1, 3);
  REQUIRE(top.size() == 3);
  CHECK(top[0] == doctest::Approx(100.0));
  CHECK(top[1] == doctest::Approx(10.0));
  CHECK(top[2] == doctest::Approx(10.0));
  CHECK_THROWS_AS(strongest_links(t, 1, 5), DomainError);
  CHECK_THROWS_AS(strongest_links(t, 9, 1), DomainError);
}

TEST_CASE("empirical CDF") {
  const auto cdf = make_empirical_cdf({0.3, 0.1, 0.2, 0.2});
  CHECK(cdf.sorted_values == std::vector<double>{0.1, 0.2, 0.2, 0.3});
  CHECK(cdf.probabilities == std::vector<double>{0.25, 0.5, 0.75, 1.0});
  std::ostringstream out;
  write_cdf(cdf, out);
  CHECK(out.str() == "value,probability\n0.1,0.25\n0.2,0.5\n0.2,0.75\n0.3,1\n");
  CHECK_THROWS_AS(make_empirical_cdf({}), DomainError);
}

TEST_CASE("SCo CDF equals the per-row closed form") {
  const auto t = synthesize_trace(200, 16, {}, 3);
  const auto res = empirical_outage_cdf(t, 1, 1.0, Combiner::kSCo);
  REQUIRE(res.per_measurement.size() == 200);
  for (const auto& m : res.per_measurement) {
    double best = -1e300;
    for (std::size_t i : t.entries(m.measurement_id)) {
      best = std::max(best, t.records()[i].avg_snr_db);
    }
    CHECK(m.value == doctest::Approx(-std::expm1(-1.0 / db_to_linear(best))).epsilon(1e-12));
  }
}

TEST_CASE("JD <= MRC <= SC per measurement") {
  const auto t = synthesize_trace(1000, 16, {}, 1);
  for (int n : {2, 3}) {
    const auto jd = empirical_outage_cdf(t, n, 1.0, Combiner::kJD);
    const auto mrc = empirical_outage_cdf(t, n, 1.0, Combiner::kMRC);
    const auto sc = empirical_outage_cdf(t, n, 1.0, Combiner::kSC);
    REQUIRE(jd.per_measurement.size() == 1000);
    int bad = 0;
    for (std::size_t i = 0; i < 1000; ++i) {
      if (jd.per_measurement[i].value > mrc.per_measurement[i].value ||
          mrc.per_measurement[i].value > sc.per_measurement[i].value) {
        ++bad;
      }
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("JD asymptote vs Monte-Carlo on sampled rows") {
  // Rows of the synthetic trace are high-SNR, where the asymptote is an
  // accurate stand-in for the exact JD outage.
  const auto t = synthesize_trace(1000, 16, {}, 1);
  const auto ids = t.measurement_ids();
  oracle::Rng rng(5);
  for (int k = 0; k < 10; ++k) {
    const long long id = ids[static_cast<std::size_t>(rng.integer(0, 999))];
    const auto links = strongest_links(t, id, 2);
    const double a = outage_asymptotic(Combiner::kJD, links, 1.0).value;
    const double q = outage_jd_quadrature(links, 1.0).value;
    CHECK(q <= a * 1.0000001);
    const auto mc = outage_monte_carlo(Combiner::kJD, links, 1.0, 1'000'000, 40 + k);
    CHECK(mc.value <= a + 3 * *mc.ci_half_width);
  }
}

TEST_CASE("skipped measurements and throughput CDF") {
  const auto t = parse(
      "measurement_id,bs_id,avg_snr_db\n"
      "1,a,30\n1,b,20\n2,a,25\n");
  const auto r = empirical_outage_cdf(t, 2, 1.0, Combiner::kMRC);
  CHECK(r.skipped == 1);
  CHECK(r.per_measurement.size() == 1);
  const auto th = empirical_throughput_cdf(t, 1, 1e-5, 20e6, Combiner::kSCo);
  REQUIRE(th.per_measurement.size() == 2);
  CHECK(th.per_measurement[0].value ==
        doctest::Approx(20e6 * std::log2(1e-5 * 1e3 + 1) * (1 - 1e-5)));
}

TEST_CASE("synthetic traces are deterministic") {
  const auto a = synthesize_trace(100, 16, {}, 9);
  const auto b = synthesize_trace(100, 16, {}, 9);
  const auto c = synthesize_trace(100, 16, {}, 10);
  std::ostringstream sa, sb, sc;
  write_trace(a, sa);
  write_trace(b, sb);
  write_trace(c, sc);
  CHECK(sa.str() == sb.str());
  CHECK(sa.str() != sc.str());
  CHECK(a.size() == 1600);
  CHECK(a.measurement_ids().front() == 1);
}
