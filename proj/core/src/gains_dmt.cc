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

#include "mcoutage/gains_dmt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mcoutage/error.hpp"
#include "mcoutage/outage.hpp"
#include "mcoutage/special_functions.hpp"

namespace mcoutage {
namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kLn10 = std::numbers::ln10;

// ln of (prod_i d_i^-eta)^(1/N) / d_1^-eta.
double log_distance_factor(const GainQuery& q) {
  double mean_log = 0.0;
  for (double d : q.distances) mean_log += std::log(d);
  mean_log /= static_cast<double>(q.distances.size());
  return -q.eta * mean_log + q.eta * std::log(q.distances[0]);
}

}  // namespace

GainQuery GainQuery::unit(int n_links, double rate, double p_out) {
  GainQuery q;
  q.n_links = n_links;
  q.rate = rate;
  q.p_out = p_out;
  q.distances.assign(static_cast<std::size_t>(std::max(n_links, 0)), 1.0);
  return q;
}

void GainQuery::validate() const {
  if (n_links < 1) throw DomainError("gain query: n_links must be >= 1");
  if (!(rate > 0.0)) throw DomainError("gain query: rate must be > 0");
  if (!(p_out > 0.0 && p_out < 1.0)) {
    throw DomainError("gain query: p_out must lie in (0, 1)");
  }
  if (distances.size() != static_cast<std::size_t>(n_links)) {
    throw DomainError("gain query: expected " + std::to_string(n_links) +
                      " distances, got " + std::to_string(distances.size()));
  }
  for (double d : distances) {
    if (!(d > 0.0)) throw DomainError("gain query: distances must be > 0");
  }
  if (!(eta > 0.0)) throw DomainError("gain query: eta must be > 0");
}

double required_total_snr(Combiner combiner, const GainQuery& q) {
  q.validate();
  const double log_p = std::log(q.p_out);
  switch (combiner) {
    case Combiner::kJD: {
      const int n = q.n_links;
      double mean_log_d = 0.0;
      for (double d : q.distances) mean_log_d += std::log(d);
      mean_log_d /= n;
      return std::exp(std::log(static_cast<double>(n)) +
                      (std::log(coding_constant(n, q.rate)) - log_p) / n +
                      q.eta * mean_log_d);
    }
    case Combiner::kSCo:
      return std::exp(std::log(coding_constant(1, q.rate)) - log_p +
                      q.eta * std::log(q.distances[0]));
    default:
      throw DomainError("required_total_snr: only jd and sco are defined");
  }
}

double snr_gain_mco_sco(const GainQuery& q) {
  q.validate();
  const int n = q.n_links;
  const double log_gain = std::log(coding_constant(1, q.rate)) -
                          std::log(static_cast<double>(n)) -
                          std::log(coding_constant(n, q.rate)) / n -
                          (n - 1.0) / n * std::log(q.p_out) + log_distance_factor(q);
  return std::exp(log_gain);
}

double snr_gain_mco_sco_approx(const GainQuery& q) {
  q.validate();
  const int n = q.n_links;
  const double e = (n - 1.0) / n;
  const double log_const =
      (log_factorial(n - 1) - (n - 1) * std::log(kLn2) - n * std::log(double(n))) / n;
  const double log_gain = log_const + e * q.rate * kLn2 - e * std::log(q.rate) -
                          e * std::log(q.p_out) + log_distance_factor(q);
  return std::exp(log_gain);
}

double snr_gain_jd_vs(Combiner reference, int n, double rate) {
  if (n < 2) throw DomainError("snr_gain_jd_vs: n must be >= 2");
  if (!(rate > 0.0)) throw DomainError("snr_gain_jd_vs: rate must be > 0");
  const double log_vs_sc =
      std::log(coding_constant(1, rate)) - std::log(coding_constant(n, rate)) / n;
  switch (reference) {
    case Combiner::kSC:
      return std::exp(log_vs_sc);
    case Combiner::kMRC:
      return std::exp(log_vs_sc - log_factorial(n) / n);
    default:
      throw DomainError("snr_gain_jd_vs: reference must be sc or mrc");
  }
}

double gain_slope_wrt_outage(int n, double p_out, SlopeConstants constants) {
  if (n < 2) throw DomainError("gain_slope_wrt_outage: n must be >= 2");
  if (!(p_out > 0.0 && p_out < 1.0)) {
    throw DomainError("gain_slope_wrt_outage: p_out must lie in (0, 1)");
  }
  const double c = constants == SlopeConstants::kRounded ? 4.3 : 10.0 / kLn10;
  return -c * (n - 1.0) / n / p_out;
}

double gain_slope_wrt_rate(int n, SlopeConstants constants) {
  if (n < 2) throw DomainError("gain_slope_wrt_rate: n must be >= 2");
  const double c = constants == SlopeConstants::kRounded ? 3.0 : 10.0 * std::log10(2.0);
  return c * (n - 1.0) / n;
}

DmtPoint dmt(Combiner combiner, double r, int n) {
  if (n < 1) throw DomainError("dmt: n must be >= 1");
  if (combiner == Combiner::kSCo && n != 1) {
    throw DomainError("dmt: sco is defined for n = 1 only");
  }
  const double r_max = combiner == Combiner::kJD ? n : 1.0;
  if (!(r >= 0.0 && r <= r_max)) {
    throw DomainError("dmt: multiplexing gain " + std::to_string(r) +
                      " outside [0, " + std::to_string(r_max) + "]");
  }
  const double d = combiner == Combiner::kJD ? n - r : n * (1.0 - r);
  return {r, d};
}

double dmt_empirical(Combiner combiner, double r, int n,
                     std::span<const double> system_snr_grid_db, double zero_gain_rate) {
  dmt(combiner, r, n);  // domain checks
  if (system_snr_grid_db.size() < 2) {
    throw DomainError("dmt_empirical: need at least two grid points");
  }
  const auto [lo_it, hi_it] =
      std::minmax_element(system_snr_grid_db.begin(), system_snr_grid_db.end());
  if (*hi_it - *lo_it < 40.0) {
    throw DomainError("dmt_empirical: SNR grid must span at least 40 dB");
  }
  std::vector<double> grid(system_snr_grid_db.begin(), system_snr_grid_db.end());
  std::sort(grid.begin(), grid.end());
  const double s1 = grid[grid.size() - 2];
  const double s2 = grid.back();
  if (s1 == s2) throw DomainError("dmt_empirical: duplicate top grid points");

  auto log_outage = [&](double snr_db) {
    const double system = std::pow(10.0, snr_db / 10.0);
    const std::vector<double> snrs(static_cast<std::size_t>(n), system / n);
    const double rate = r > 0.0 ? r * std::log2(system) : zero_gain_rate;
    return log_outage_asymptote(combiner, snrs, rate);
  };
  const double dlog_p = log_outage(s2) - log_outage(s1);
  const double dlog_snr = (s2 - s1) / 10.0 * kLn10;
  return -dlog_p / dlog_snr;
}

}  // namespace mcoutage
