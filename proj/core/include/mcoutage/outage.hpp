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

#ifndef MCOUTAGE_OUTAGE_HPP_
#define MCOUTAGE_OUTAGE_HPP_

// Outage probability Pr[C(g_1..g_N) < R] of the four combiners over
// independent Rayleigh block-fading links with average SNRs avg_snrs.
//
// Evaluators:
//   outage_monte_carlo       sampling, any combiner, any N
//   outage_jd_quadrature     nested adaptive quadrature, JD, N <= 4
//   outage_exact_closed      closed forms for SC, MRC and SCo
//   outage_asymptotic        high-SNR forms A/prod(avg)
//   outage_jd_lower_bound_tse, mrc_simplex_bound
//
// Link 0 is the only link SCo looks at.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "mcoutage/combiner.hpp"
#include "mcoutage/link_model.hpp"

namespace mcoutage {

enum class OutageMethod {
  kExact,
  kQuadrature,
  kMonteCarlo,
  kAsymptotic,
  kBoundLower,
  kBoundUpper,
};

std::string_view to_string(OutageMethod m);

struct OutageEstimate {
  double value = 0.0;  // always in [0, 1]
  OutageMethod method = OutageMethod::kExact;
  // Monte-Carlo only: 95% normal-approximation half width and sample size.
  std::optional<double> ci_half_width;
  std::optional<std::uint64_t> sample_count;
  std::optional<std::uint64_t> outage_events;
  // Monte-Carlo with fewer than 100 observed outages.
  bool low_event_count = false;
  // Asymptote or bound exceeded 1 and was clamped.
  bool saturated = false;
};

double instantaneous_capacity(Combiner combiner, std::span<const double> gammas);

inline constexpr std::uint64_t kMinMonteCarloSamples = 1000;
inline constexpr std::uint64_t kMinReliableOutageEvents = 100;

OutageEstimate outage_monte_carlo(Combiner combiner, std::span<const double> avg_snrs,
                                  double rate, std::uint64_t samples,
                                  std::uint64_t seed, unsigned workers = 0);
OutageEstimate outage_monte_carlo(Combiner combiner, const Topology& topology,
                                  double rate, std::uint64_t samples,
                                  std::uint64_t seed, unsigned workers = 0);

inline constexpr int kMaxQuadratureLinks = 4;

// Each nesting level is integrated to rel_tol / N; the innermost level is
// closed form. rel_tol must lie in [1e-10, 1e-3].
OutageEstimate outage_jd_quadrature(std::span<const double> avg_snrs, double rate,
                                    double rel_tol = 1e-8);

OutageEstimate outage_asymptotic(Combiner combiner, std::span<const double> avg_snrs,
                                 double rate);

// Natural log of the unclamped asymptote; finite for any rate > 0.
double log_outage_asymptote(Combiner combiner, std::span<const double> avg_snrs,
                            double rate);

enum class MrcSpacing { kEqual, kDistinct, kNearDegenerate };

// Equal when the largest pairwise relative gap is below 1e-9, distinct when
// the smallest is above 1e-4.
MrcSpacing classify_mrc_spacing(std::span<const double> avg_snrs);

struct ExactOptions {
  // Near-degenerate MRC spacings go through numerical convolution when true,
  // otherwise they raise DomainError.
  bool allow_convolution_fallback = true;
  double convolution_rel_tol = 1e-10;
};

OutageEstimate outage_exact_closed(Combiner combiner, std::span<const double> avg_snrs,
                                   double rate, const ExactOptions& options = {});

// Pr[sum_i g_i < 2^R - 1] by N-1 nested convolutions of the exponential
// densities. Works for any spacing.
OutageEstimate outage_mrc_convolution(std::span<const double> avg_snrs, double rate,
                                      double rel_tol = 1e-10);

// Equal-share lower bound [1 - exp(-A_1(R/N)/avg)]^N for N equal links.
OutageEstimate outage_jd_lower_bound_tse(double avg_snr, int n, double rate);

// A_1^N / (N! prod avg), an upper bound on MRC outage at every SNR.
OutageEstimate mrc_simplex_bound(std::span<const double> avg_snrs, double rate);

}  // namespace mcoutage

#endif  // MCOUTAGE_OUTAGE_HPP_
