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

#include "mcoutage/link_model.hpp"

#include <cmath>
#include <string>

#include "mcoutage/error.hpp"
#include "mcoutage/parallel.hpp"
#include "mcoutage/philox.hpp"

namespace mcoutage {
namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be positive and finite, got " +
                      std::to_string(v));
  }
}

}  // namespace

Link::Link(double power_ratio, double distance, double path_loss_exponent)
    : power_ratio_(power_ratio),
      distance_(distance),
      path_loss_exponent_(path_loss_exponent) {
  require_positive(power_ratio, "power ratio");
  require_positive(distance, "distance");
  require_positive(path_loss_exponent, "path-loss exponent");
}

double Link::average_snr() const {
  return power_ratio_ * std::pow(distance_, -path_loss_exponent_);
}

Topology::Topology(std::vector<Link> links, double bandwidth_hz)
    : links_(std::move(links)), bandwidth_hz_(bandwidth_hz) {
  if (links_.empty()) throw DomainError("topology needs at least one link");
  require_positive(bandwidth_hz, "bandwidth");
}

Topology equal_power_topology(double total_power_ratio,
                              std::span<const double> distances, double eta,
                              double bandwidth_hz) {
  require_positive(total_power_ratio, "total power ratio");
  if (distances.empty()) throw DomainError("topology needs at least one distance");
  const double per_link = total_power_ratio / static_cast<double>(distances.size());
  std::vector<Link> links;
  links.reserve(distances.size());
  for (double d : distances) links.emplace_back(per_link, d, eta);
  return Topology(std::move(links), bandwidth_hz);
}

std::vector<double> average_snrs(const Topology& topology) {
  std::vector<double> out;
  out.reserve(topology.size());
  for (const Link& l : topology.links()) out.push_back(l.average_snr());
  return out;
}

void sample_chunk(std::span<const double> avg_snrs, std::uint64_t seed,
                  std::uint64_t chunk, std::size_t rows, std::span<double> out) {
  PhiloxStream stream(seed, chunk);
  const std::size_t n = avg_snrs.size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      out[r * n + i] = -avg_snrs[i] * std::log(stream.next_open_unit());
    }
  }
}

SnrSampleBlock sample_snr_block(std::span<const double> avg_snrs, std::size_t count,
                                std::uint64_t seed, unsigned workers) {
  if (count < 1) throw DomainError("sample count must be >= 1");
  if (avg_snrs.empty()) throw DomainError("need at least one link");
  for (double g : avg_snrs) require_positive(g, "average SNR");

  SnrSampleBlock block;
  block.count = count;
  block.links = avg_snrs.size();
  block.seed = seed;
  block.samples.resize(count * block.links);

  const std::size_t chunks = (count + kSampleChunkSize - 1) / kSampleChunkSize;
  parallel_for(chunks, workers, [&](std::size_t c) {
    const std::size_t first = c * kSampleChunkSize;
    const std::size_t rows = std::min(kSampleChunkSize, count - first);
    sample_chunk(avg_snrs, seed, c, rows,
                 std::span<double>(block.samples).subspan(first * block.links,
                                                          rows * block.links));
  });
  return block;
}

SnrSampleBlock sample_snr_block(const Topology& topology, std::size_t count,
                                std::uint64_t seed, unsigned workers) {
  const auto snrs = average_snrs(topology);
  return sample_snr_block(snrs, count, seed, workers);
}

double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

double linear_to_db(double x) {
  if (!(x > 0.0)) {
    throw DomainError("linear_to_db: value must be > 0, got " + std::to_string(x));
  }
  return 10.0 * std::log10(x);
}

}  // namespace mcoutage
