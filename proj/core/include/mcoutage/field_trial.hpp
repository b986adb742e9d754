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

#ifndef MCOUTAGE_FIELD_TRIAL_HPP_
#define MCOUTAGE_FIELD_TRIAL_HPP_

// Empirical outage and throughput CDFs from per-(measurement, base station)
// average-SNR traces.
//
// Trace CSV: header `measurement_id,bs_id,avg_snr_db`, UTF-8, '.' decimal
// separator, lines starting with '#' ignored. CDF CSV: header
// `value,probability`.

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mcoutage/combiner.hpp"
#include "mcoutage/error.hpp"

namespace mcoutage {

class TraceFormatError : public IoError {
 public:
  TraceFormatError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct TraceRecord {
  long long measurement_id = 0;
  std::string bs_id;
  double avg_snr_db = 0.0;
};

class SnrTrace {
 public:
  SnrTrace() = default;
  // Throws DomainError on duplicate (measurement_id, bs_id) pairs.
  explicit SnrTrace(std::vector<TraceRecord> records);

  std::span<const TraceRecord> records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  // Ascending measurement ids.
  std::vector<long long> measurement_ids() const;
  // Indices into records() for one measurement, in file order.
  std::span<const std::size_t> entries(long long measurement_id) const;

 private:
  std::vector<TraceRecord> records_;
  std::map<long long, std::vector<std::size_t>> index_;
};

SnrTrace parse_trace(std::istream& in, const std::string& source_name = "<stream>");
// Throws IoError when the file cannot be opened.
SnrTrace load_trace(const std::filesystem::path& path);
void write_trace(const SnrTrace& trace, std::ostream& out);

// The n largest average SNRs of a measurement, linear, descending; ties go to
// the lexicographically smaller bs_id. Throws DomainError when fewer than n
// entries exist.
std::vector<double> strongest_links(const SnrTrace& trace, long long measurement_id,
                                    int n);

struct EmpiricalCdf {
  std::vector<double> sorted_values;
  std::vector<double> probabilities;  // k / M, k = 1..M
};

// Throws DomainError on an empty sample.
EmpiricalCdf make_empirical_cdf(std::vector<double> values);
void write_cdf(const EmpiricalCdf& cdf, std::ostream& out);

struct MeasurementValue {
  long long measurement_id;
  double value;
};

struct FieldTrialResult {
  EmpiricalCdf cdf;
  std::vector<MeasurementValue> per_measurement;  // ascending id
  std::size_t skipped = 0;    // too few base stations
  std::size_t saturated = 0;  // JD asymptote clamped to 1
};

// Per measurement on its n strongest links (SCo: the single strongest):
// JD asymptote, exact SC, exact MRC (with near-degenerate fallback), exact SCo.
FieldTrialResult empirical_outage_cdf(const SnrTrace& trace, int n, double rate,
                                      Combiner combiner);

// Per measurement: asymptotic achievable rate at p_out times B (1 - p_out).
FieldTrialResult empirical_throughput_cdf(const SnrTrace& trace, int n, double p_out,
                                          double bandwidth_hz, Combiner combiner);

// Dense urban deployment used to stand in for measured traces. Base station b
// sits on site b % sites with boresight (b / sites) * sector_spacing_deg plus
// a per-site rotation; the UE is dropped uniformly in a disc per measurement.
struct SynthParams {
  int sites = 5;
  double site_radius_m = 350.0;
  double area_radius_m = 500.0;
  double min_distance_m = 20.0;
  double snr_at_100m_db = 45.0;
  double path_loss_exponent = 3.5;
  double shadowing_sigma_db = 6.0;
  double sector_spacing_deg = 60.0;
  double beamwidth_deg = 65.0;
  double max_sector_loss_db = 20.0;
};

// Values are rounded to 0.01 dB so a written trace reloads identically.
SnrTrace synthesize_trace(std::size_t n_measurements, std::size_t n_bs,
                          const SynthParams& params, std::uint64_t seed);

}  // namespace mcoutage

#endif  // MCOUTAGE_FIELD_TRIAL_HPP_
