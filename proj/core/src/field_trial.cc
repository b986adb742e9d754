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

#include "mcoutage/field_trial.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

#include "mcoutage/csv.hpp"
#include "mcoutage/link_model.hpp"
#include "mcoutage/outage.hpp"
#include "mcoutage/philox.hpp"
#include "mcoutage/throughput.hpp"

namespace mcoutage {

TraceFormatError::TraceFormatError(const std::string& source, std::size_t line,
                                   const std::string& what)
    : IoError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

SnrTrace::SnrTrace(std::vector<TraceRecord> records) : records_(std::move(records)) {
  std::set<std::pair<long long, std::string>> seen;
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    if (!seen.emplace(r.measurement_id, r.bs_id).second) {
      throw DomainError("duplicate trace entry (measurement " +
                        std::to_string(r.measurement_id) + ", bs " + r.bs_id + ")");
    }
    index_[r.measurement_id].push_back(i);
  }
}

std::vector<long long> SnrTrace::measurement_ids() const {
  std::vector<long long> ids;
  ids.reserve(index_.size());
  for (const auto& [id, _] : index_) ids.push_back(id);
  return ids;
}

std::span<const std::size_t> SnrTrace::entries(long long measurement_id) const {
  const auto it = index_.find(measurement_id);
  if (it == index_.end()) return {};
  return it->second;
}

SnrTrace parse_trace(std::istream& in, const std::string& source_name) {
  std::vector<TraceRecord> records;
  std::set<std::pair<long long, std::string>> seen;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto fields = split_fields(body);
    if (!header_seen) {
      if (fields.size() != 3 || fields[0] != "measurement_id" || fields[1] != "bs_id" ||
          fields[2] != "avg_snr_db") {
        throw TraceFormatError(source_name, line_no,
                               "expected header 'measurement_id,bs_id,avg_snr_db'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 3) {
      throw TraceFormatError(source_name, line_no,
                             "expected 3 fields, got " + std::to_string(fields.size()));
    }
    TraceRecord rec;
    if (!parse_int64(fields[0], rec.measurement_id)) {
      throw TraceFormatError(source_name, line_no,
                             "bad measurement_id '" + std::string(fields[0]) + "'");
    }
    if (fields[1].empty()) throw TraceFormatError(source_name, line_no, "empty bs_id");
    rec.bs_id = std::string(fields[1]);
    if (!parse_double(fields[2], rec.avg_snr_db)) {
      throw TraceFormatError(source_name, line_no,
                             "bad avg_snr_db '" + std::string(fields[2]) + "'");
    }
    if (!seen.emplace(rec.measurement_id, rec.bs_id).second) {
      throw TraceFormatError(source_name, line_no,
                             "duplicate key (measurement " +
                                 std::to_string(rec.measurement_id) + ", bs " +
                                 rec.bs_id + ")");
    }
    records.push_back(std::move(rec));
  }
  if (!header_seen) throw TraceFormatError(source_name, line_no, "missing header");
  if (records.empty()) throw TraceFormatError(source_name, line_no, "empty trace");
  return SnrTrace(std::move(records));
}

SnrTrace load_trace(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open trace file '" + path.string() + "'");
  return parse_trace(in, path.string());
}

void write_trace(const SnrTrace& trace, std::ostream& out) {
  out << "measurement_id,bs_id,avg_snr_db\n";
  for (const auto& r : trace.records()) {
    out << r.measurement_id << ',' << r.bs_id << ',' << format_double(r.avg_snr_db)
        << '\n';
  }
}

std::vector<double> strongest_links(const SnrTrace& trace, long long measurement_id,
                                    int n) {
  const auto idx = trace.entries(measurement_id);
  if (n < 1 || idx.size() < static_cast<std::size_t>(n)) {
    throw DomainError("measurement " + std::to_string(measurement_id) + " has " +
                      std::to_string(idx.size()) + " links, need " + std::to_string(n));
  }
  std::vector<const TraceRecord*> recs;
  recs.reserve(idx.size());
  for (std::size_t i : idx) recs.push_back(&trace.records()[i]);
  std::sort(recs.begin(), recs.end(), [](const TraceRecord* a, const TraceRecord* b) {
    if (a->avg_snr_db != b->avg_snr_db) return a->avg_snr_db > b->avg_snr_db;
    return a->bs_id < b->bs_id;
  });
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(db_to_linear(recs[i]->avg_snr_db));
  return out;
}

EmpiricalCdf make_empirical_cdf(std::vector<double> values) {
  if (values.empty()) throw DomainError("empirical CDF of an empty sample");
  std::sort(values.begin(), values.end());
  EmpiricalCdf cdf;
  const double m = static_cast<double>(values.size());
  cdf.probabilities.reserve(values.size());
  for (std::size_t k = 1; k <= values.size(); ++k) {
    cdf.probabilities.push_back(static_cast<double>(k) / m);
  }
  cdf.sorted_values = std::move(values);
  return cdf;
}

void write_cdf(const EmpiricalCdf& cdf, std::ostream& out) {
  out << "value,probability\n";
  for (std::size_t i = 0; i < cdf.sorted_values.size(); ++i) {
    out << format_double(cdf.sorted_values[i]) << ','
        << format_double(cdf.probabilities[i]) << '\n';
  }
}

namespace {

template <class PerRow>
FieldTrialResult evaluate_rows(const SnrTrace& trace, int n, Combiner combiner,
                               PerRow&& per_row) {
  if (n < 1) throw DomainError("number of links must be >= 1");
  const int used = combiner == Combiner::kSCo ? 1 : n;
  FieldTrialResult result;
  std::vector<double> values;
  for (long long id : trace.measurement_ids()) {
    if (trace.entries(id).size() < static_cast<std::size_t>(used)) {
      ++result.skipped;
      continue;
    }
    const auto links = strongest_links(trace, id, used);
    const double v = per_row(links, result);
    result.per_measurement.push_back({id, v});
    values.push_back(v);
  }
  result.cdf = make_empirical_cdf(std::move(values));
  return result;
}

}  // namespace

FieldTrialResult empirical_outage_cdf(const SnrTrace& trace, int n, double rate,
                                      Combiner combiner) {
  if (!(rate > 0.0)) throw DomainError("empirical_outage_cdf: rate must be > 0");
  return evaluate_rows(trace, n, combiner,
                       [&](const std::vector<double>& links, FieldTrialResult& res) {
                         if (combiner == Combiner::kJD) {
                           const auto e = outage_asymptotic(Combiner::kJD, links, rate);
                           if (e.saturated) ++res.saturated;
                           return e.value;
                         }
                         return outage_exact_closed(combiner, links, rate).value;
                       });
}

FieldTrialResult empirical_throughput_cdf(const SnrTrace& trace, int n, double p_out,
                                          double bandwidth_hz, Combiner combiner) {
  if (!(p_out > 0.0 && p_out < 1.0)) {
    throw DomainError("empirical_throughput_cdf: p_out must lie in (0, 1)");
  }
  if (!(bandwidth_hz > 0.0)) {
    throw DomainError("empirical_throughput_cdf: bandwidth must be > 0");
  }
  return evaluate_rows(trace, n, combiner,
                       [&](const std::vector<double>& links, FieldTrialResult&) {
                         const double rate =
                             achievable_rate_asymptotic(combiner, links, p_out);
                         return throughput_from_rate(bandwidth_hz, rate, p_out);
                       });
}

SnrTrace synthesize_trace(std::size_t n_measurements, std::size_t n_bs,
                          const SynthParams& p, std::uint64_t seed) {
  if (n_measurements < 1 || n_bs < 1) {
    throw DomainError("synthesize_trace: counts must be >= 1");
  }
  if (p.sites < 1) throw DomainError("synthesize_trace: need at least one site");
  constexpr double kDeg = std::numbers::pi / 180.0;

  // Stream 0 places the sites; stream m + 1 drives measurement m.
  PhiloxStream layout(seed, 0);
  struct Site {
    double x, y, rotation_deg;
  };
  std::vector<Site> sites;
  for (int s = 0; s < p.sites; ++s) {
    const double angle = 2.0 * std::numbers::pi * s / p.sites;
    const double rot = 360.0 * layout.next_open_unit();
    sites.push_back({p.site_radius_m * std::cos(angle), p.site_radius_m * std::sin(angle),
                     rot});
  }

  std::vector<TraceRecord> records;
  records.reserve(n_measurements * n_bs);
  for (std::size_t m = 0; m < n_measurements; ++m) {
    PhiloxStream rng(seed, m + 1);
    const double radius = p.area_radius_m * std::sqrt(rng.next_open_unit());
    const double theta = 2.0 * std::numbers::pi * rng.next_open_unit();
    const double ux = radius * std::cos(theta);
    const double uy = radius * std::sin(theta);
    for (std::size_t b = 0; b < n_bs; ++b) {
      const Site& site = sites[b % sites.size()];
      const std::size_t sector = b / sites.size();
      const double boresight =
          std::fmod(site.rotation_deg + sector * p.sector_spacing_deg, 360.0);
      const double dx = ux - site.x;
      const double dy = uy - site.y;
      const double dist = std::max(std::hypot(dx, dy), p.min_distance_m);
      const double off = std::fmod(std::atan2(dy, dx) / kDeg - boresight + 540.0, 360.0) - 180.0;
      const double sector_loss =
          std::min(12.0 * (off / p.beamwidth_deg) * (off / p.beamwidth_deg),
                   p.max_sector_loss_db);
      const double snr_db = p.snr_at_100m_db -
                            10.0 * p.path_loss_exponent * std::log10(dist / 100.0) -
                            sector_loss + p.shadowing_sigma_db * rng.next_normal();
      std::string bs_id = "site" + std::to_string(b % sites.size() + 1) + "-sec" +
                          std::to_string(sector + 1);
      records.push_back({static_cast<long long>(m + 1), std::move(bs_id),
                         std::round(snr_db * 100.0) / 100.0});
    }
  }
  return SnrTrace(std::move(records));
}

}  // namespace mcoutage
