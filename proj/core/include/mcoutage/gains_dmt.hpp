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

#ifndef MCOUTAGE_GAINS_DMT_HPP_
#define MCOUTAGE_GAINS_DMT_HPP_

// Required transmit SNR, SNR gains of multi-connectivity and of joint decoding,
// their analytic slopes, and the diversity-multiplexing tradeoff.
//
// Every gain here is a linear power ratio; convert with linear_to_db.

#include <span>
#include <vector>

#include "mcoutage/combiner.hpp"

namespace mcoutage {

struct GainQuery {
  int n_links = 2;
  double rate = 1.0;
  double p_out = 1e-3;
  std::vector<double> distances;  // one per link; distances[0] is the SCo link
  double eta = 2.0;

  // Unit distances for n links.
  static GainQuery unit(int n_links, double rate, double p_out);

  // Throws DomainError on a violated invariant.
  void validate() const;
};

// Total transmit SNR P_T/N0 (linear) needed to hit query.p_out at query.rate.
// Only kJD (power split evenly over all links) and kSCo (link 0) are defined.
double required_total_snr(Combiner combiner, const GainQuery& query);

// sigma_SCo / sigma_JD written out in closed form.
double snr_gain_mco_sco(const GainQuery& query);

// High-rate simplification of snr_gain_mco_sco, keeping only the dominant
// term of A_N.
double snr_gain_mco_sco_approx(const GainQuery& query);

// Ratio of JD's coding gain to SC's (reference = kSC) or MRC's (kMRC).
double snr_gain_jd_vs(Combiner reference, int n, double rate);

enum class SlopeConstants {
  kRounded,  // rounded constants 4.3 and 3 dB
  kExact,    // 10/ln 10 and 10 log10 2
};

// d(10 log10 G_MCo,SCo)/d(p_out) in dB per unit outage probability.
double gain_slope_wrt_outage(int n, double p_out,
                             SlopeConstants constants = SlopeConstants::kRounded);

// High-rate slope of 10 log10 G_MCo,SCo in dB per unit rate.
double gain_slope_wrt_rate(int n, SlopeConstants constants = SlopeConstants::kRounded);

struct DmtPoint {
  double multiplexing_gain = 0.0;
  double diversity_gain = 0.0;
};

// JD: d = N - r on [0, N]; SC/MRC (and SCo with N = 1): d = N (1 - r) on [0, 1].
DmtPoint dmt(Combiner combiner, double r, int n);

// Finite-SNR diversity estimate -dlog P / dlog(N avg) from the asymptotic
// outage at the two largest grid points. Grid values are the system SNR
// N * avg in dB and must span at least 40 dB. The rate follows
// r * log2(N avg); r == 0 uses the constant zero_gain_rate instead.
double dmt_empirical(Combiner combiner, double r, int n,
                     std::span<const double> system_snr_grid_db,
                     double zero_gain_rate = 1.0);

}  // namespace mcoutage

#endif  // MCOUTAGE_GAINS_DMT_HPP_
