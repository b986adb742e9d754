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
#include <vector>

#include "doctest.h"
#include "mcoutage/error.hpp"
#include "mcoutage/link_model.hpp"

using namespace mcoutage;

TEST_CASE("Link validation and average SNR") {
  Link l(100.0, 2.0, 3.0);
  CHECK(l.average_snr() == doctest::Approx(12.5));
  CHECK_THROWS_AS(Link(0.0, 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(Link(1.0, -1.0, 2.0), DomainError);
  CHECK_THROWS_AS(Link(1.0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(Link(std::nan(""), 1.0, 2.0), DomainError);
}

TEST_CASE("Topology") {
  CHECK_THROWS_AS(Topology({}, 1e6), DomainError);
  CHECK_THROWS_AS(Topology({Link(1, 1, 2)}, 0.0), DomainError);
  const std::vector<double> d{1.0, 2.0};
  const auto t = equal_power_topology(100.0, d, 2.0, 20e6);
  REQUIRE(t.size() == 2);
  const auto avg = average_snrs(t);
  CHECK(avg[0] == doctest::Approx(50.0));
  CHECK(avg[1] == doctest::Approx(12.5));
  CHECK(t.bandwidth_hz() == 20e6);
}

TEST_CASE("dB conversions") {
  CHECK(db_to_linear(30.0) == doctest::Approx(1000.0));
  CHECK(linear_to_db(0.01) == doctest::Approx(-20.0));
  CHECK_THROWS_AS(linear_to_db(0.0), DomainError);
  CHECK_THROWS_AS(linear_to_db(-1.0), DomainError);
}

TEST_CASE("sample block: determinism, worker independence, layout") {
  const std::vector<double> avg{1.0, 10.0, 0.1};
  const std::size_t count = 3 * kSampleChunkSize + 17;
  const auto a = sample_snr_block(avg, count, 99, 1);
  const auto b = sample_snr_block(avg, count, 99, 4);
  CHECK(a.samples == b.samples);
  CHECK(a.count == count);
  CHECK(a.links == 3);
  CHECK(a.samples.size() == count * 3);
  const auto c = sample_snr_block(avg, count, 100, 1);
  CHECK(a.samples != c.samples);
  // Chunk k of a block equals sample_chunk(k).
  std::vector<double> chunk(kSampleChunkSize * 3);
  sample_chunk(avg, 99, 1, kSampleChunkSize, chunk);
  CHECK(std::equal(chunk.begin(), chunk.end(), a.samples.begin() + kSampleChunkSize * 3));
}

TEST_CASE("samples are exponential with the requested means") {
  const std::vector<double> avg{1.0, 10.0};
  const std::size_t count = 400000;
  const auto blk = sample_snr_block(avg, count, 5, 1);
  for (std::size_t j = 0; j < 2; ++j) {
    double sum = 0.0;
    std::size_t below = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const double g = blk.at(i, j);
      REQUIRE(g >= 0.0);
      sum += g;
      if (g < avg[j]) ++below;
    }
    CHECK(sum / count == doctest::Approx(avg[j]).epsilon(0.01));
    // Pr[g < mean] = 1 - 1/e
    CHECK(static_cast<double>(below) / count ==
          doctest::Approx(1 - std::exp(-1.0)).epsilon(0.005));
  }
}

TEST_CASE("sample block validation") {
  const std::vector<double> bad{1.0, -1.0};
  CHECK_THROWS_AS(sample_snr_block(bad, 10, 1), DomainError);
  const std::vector<double> none;
  CHECK_THROWS_AS(sample_snr_block(none, 10, 1), DomainError);
}
