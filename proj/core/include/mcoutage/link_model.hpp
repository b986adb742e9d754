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

#ifndef MCOUTAGE_LINK_MODEL_HPP_
#define MCOUTAGE_LINK_MODEL_HPP_

// Links, topologies and the Rayleigh block-fading SNR sampler.
//
// All SNR quantities are linear inside the library; dB only appears at the
// CLI and file boundaries.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mcoutage {

// Chunk size of the sampler. Chunk c of a run with seed s always draws from
// Philox stream c under key s, independent of the worker count.
inline constexpr std::size_t kSampleChunkSize = std::size_t{1} << 16;

class Link {
 public:
  // Throws DomainError unless every argument is finite and > 0.
  Link(double power_ratio, double distance, double path_loss_exponent);

  double power_ratio() const { return power_ratio_; }
  double distance() const { return distance_; }
  double path_loss_exponent() const { return path_loss_exponent_; }

  // power_ratio * distance^(-eta)
  double average_snr() const;

 private:
  double power_ratio_;
  double distance_;
  double path_loss_exponent_;
};

// N >= 1 parallel links sharing one bandwidth. Link 0 is the single-
// connectivity reference.
class Topology {
 public:
  Topology(std::vector<Link> links, double bandwidth_hz);

  std::span<const Link> links() const { return links_; }
  std::size_t size() const { return links_.size(); }
  double bandwidth_hz() const { return bandwidth_hz_; }

 private:
  std::vector<Link> links_;
  double bandwidth_hz_;
};

// Splits total_power_ratio evenly over one link per distance.
Topology equal_power_topology(double total_power_ratio,
                              std::span<const double> distances, double eta,
                              double bandwidth_hz);

std::vector<double> average_snrs(const Topology& topology);

// Row-major (count x links) matrix of instantaneous linear SNRs.
struct SnrSampleBlock {
  std::size_t count = 0;
  std::size_t links = 0;
  std::uint64_t seed = 0;
  std::vector<double> samples;

  double at(std::size_t row, std::size_t link) const {
    return samples[row * links + link];
  }
};

// Independent exponential draws -mean_i * ln(u), u uniform on (0, 1].
SnrSampleBlock sample_snr_block(std::span<const double> avg_snrs, std::size_t count,
                                std::uint64_t seed, unsigned workers = 0);
SnrSampleBlock sample_snr_block(const Topology& topology, std::size_t count,
                                std::uint64_t seed, unsigned workers = 0);

// Fills `out` (rows * avg_snrs.size() entries) with the rows of chunk `chunk`
// exactly as sample_snr_block lays them out.
void sample_chunk(std::span<const double> avg_snrs, std::uint64_t seed,
                  std::uint64_t chunk, std::size_t rows, std::span<double> out);

double db_to_linear(double x_db);
// Throws DomainError for x <= 0.
double linear_to_db(double x);

}  // namespace mcoutage

#endif  // MCOUTAGE_LINK_MODEL_HPP_
