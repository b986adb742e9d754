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

#ifndef MCOUTAGE_THROUGHPUT_HPP_
#define MCOUTAGE_THROUGHPUT_HPP_

// Throughput T = B * R * (1 - P_out) and the rate R achievable at a target
// outage probability.

#include <span>
#include <string_view>

#include "mcoutage/combiner.hpp"
#include "mcoutage/link_model.hpp"
#include "mcoutage/special_functions.hpp"

namespace mcoutage {

enum class RateMethod { kAsymptotic, kExactRoot };

std::string_view to_string(RateMethod m);

struct ThroughputResult {
  double throughput = 0.0;     // bit/s
  double achieved_rate = 0.0;  // source samples per channel symbol
  double outage = 0.0;
  RateMethod method = RateMethod::kAsymptotic;
};

double throughput_from_rate(double bandwidth_hz, double rate, double p_out);

// High-SNR rate at outage p_out:
//   JD   A_N^-1(p prod avg)
//   SC   log2((p prod avg)^(1/N) + 1)
//   MRC  log2((N! p prod avg)^(1/N) + 1)
//   SCo  log2(p avg_1 + 1)
double achievable_rate_asymptotic(Combiner combiner, std::span<const double> avg_snrs,
                                  double p_out,
                                  InverseMode mode = InverseMode::kRefined);

struct RateBracket {
  double lo = 1e-6;
  double hi = 64.0;
};

inline constexpr double kRateTolerance = 1e-6;

// Bisection on the exact outage (closed forms; quadrature for JD with N <= 4)
// to |dR| < 1e-6. Throws DomainError when p_out is not reachable inside the
// bracket or JD has more links than quadrature supports.
double achievable_rate_exact(Combiner combiner, std::span<const double> avg_snrs,
                             double p_out, RateBracket bracket = {});

ThroughputResult asymptotic_throughput(Combiner combiner, const Topology& topology,
                                       double p_out,
                                       InverseMode mode = InverseMode::kRefined);
ThroughputResult exact_throughput(Combiner combiner, const Topology& topology,
                                  double p_out, RateBracket bracket = {});

}  // namespace mcoutage

#endif  // MCOUTAGE_THROUGHPUT_HPP_
