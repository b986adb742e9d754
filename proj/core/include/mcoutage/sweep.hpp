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

#ifndef MCOUTAGE_SWEEP_HPP_
#define MCOUTAGE_SWEEP_HPP_

// Parameter sweeps behind the command-line tool. Each sweep produces a CSV
// table with a fixed column order and deterministic row order (by link count,
// then secondary parameter, then x).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcoutage/combiner.hpp"
#include "mcoutage/csv.hpp"

namespace mcoutage {

enum class Metric { kOutage, kThroughput, kGainMcoSco, kGainJdVs, kDmt };
enum class XAxis { kSnrDb, kRate, kOutageTarget, kMultiplexingGain };
enum class Method { kExact, kAsymptotic, kBound, kMonteCarlo };

std::string_view to_string(Metric m);
std::string_view to_string(XAxis x);
std::string_view to_string(Method m);
Method parse_method(std::string_view s);

struct GridRange {
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;

  // "start:stop:steps"; throws ValidationError.
  static GridRange parse(std::string_view text);
  std::vector<double> points() const;
};

struct SweepSpec {
  Metric metric = Metric::kOutage;
  std::vector<Combiner> combiners;
  std::vector<int> n_links;
  XAxis x_axis = XAxis::kSnrDb;
  GridRange range;
  double rate = 1.0;
  // Several targets are allowed for gain sweeps (one row block per target).
  std::vector<double> outages{1e-3};
  double bandwidth_hz = 20e6;
  // Empty means unit distances for every link count.
  std::vector<double> distances;
  double eta = 2.0;
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t seed = 1;
  std::vector<Method> methods;
  // SNR grid (system SNR, dB) used by the empirical DMT column.
  GridRange dmt_snr_grid{60.0, 100.0, 9};

  // Throws ValidationError naming the offending field.
  void validate() const;
};

CsvTable run_outage_sweep(const SweepSpec& spec, unsigned workers = 0);
CsvTable run_throughput_sweep(const SweepSpec& spec, unsigned workers = 0);
CsvTable run_gain_sweep(const SweepSpec& spec, unsigned workers = 0);
CsvTable run_dmt_sweep(const SweepSpec& spec, unsigned workers = 0);
// Dispatches on spec.metric.
CsvTable run_sweep(const SweepSpec& spec, unsigned workers = 0);

// Figure presets: fig2a, fig2b, fig3a, fig3b, dmt. (fig5c/fig5d are CDF runs
// and live with the cdf command.)
std::optional<SweepSpec> sweep_preset(std::string_view name);
std::vector<std::string> sweep_preset_names();

// Companion gnuplot script plotting every value column of `table` against
// column `x_column`, one curve block per link count.
std::string gnuplot_script(const CsvTable& table, const std::string& data_file,
                           const std::string& x_column, bool log_y);

}  // namespace mcoutage

#endif  // MCOUTAGE_SWEEP_HPP_
