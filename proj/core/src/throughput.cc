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

#include "mcoutage/throughput.hpp"

#include <cmath>
#include <string>

#include "mcoutage/error.hpp"
#include "mcoutage/outage.hpp"
#include "mcoutage/root_finding.hpp"

namespace mcoutage {
namespace {

void check_outage_target(double p_out, const char* who) {
  if (!(p_out > 0.0 && p_out < 1.0)) {
    throw DomainError(std::string(who) + ": outage target must lie in (0, 1), got " +
                      std::to_string(p_out));
  }
}

double exact_outage(Combiner combiner, std::span<const double> avg_snrs, double rate) {
  if (combiner == Combiner::kJD && avg_snrs.size() > 1) {
    return outage_jd_quadrature(avg_snrs, rate, 1e-9).value;
  }
  if (combiner == Combiner::kJD) {
    return outage_exact_closed(Combiner::kSCo, avg_snrs, rate).value;
  }
  return outage_exact_closed(combiner, avg_snrs, rate).value;
}

}  // namespace

std::string_view to_string(RateMethod m) {
  return m == RateMethod::kAsymptotic ? "asymptotic" : "exact-root";
}

double throughput_from_rate(double bandwidth_hz, double rate, double p_out) {
  if (!(bandwidth_hz > 0.0)) throw DomainError("throughput: bandwidth must be > 0");
  if (!(rate >= 0.0)) throw DomainError("throughput: rate must be >= 0");
  if (!(p_out >= 0.0 && p_out <= 1.0)) {
    throw DomainError("throughput: outage probability must lie in [0, 1]");
  }
  return bandwidth_hz * rate * (1.0 - p_out);
}

double achievable_rate_asymptotic(Combiner combiner, std::span<const double> avg_snrs,
                                  double p_out, InverseMode mode) {
  check_outage_target(p_out, "achievable_rate_asymptotic");
  if (avg_snrs.empty()) throw DomainError("achievable_rate_asymptotic: no links");
  double log_prod = 0.0;
  for (double g : avg_snrs) {
    if (!(g > 0.0)) throw DomainError("achievable_rate_asymptotic: SNRs must be > 0");
    log_prod += std::log(g);
  }
  const int n = static_cast<int>(avg_snrs.size());
  const double log_target = std::log(p_out) + log_prod;
  switch (combiner) {
    case Combiner::kJD:
      return coding_constant_inverse(n, std::exp(log_target), mode);
    case Combiner::kSC:
      return std::log2(std::exp(log_target / n) + 1.0);
    case Combiner::kMRC:
      return std::log2(std::exp((log_factorial(n) + log_target) / n) + 1.0);
    case Combiner::kSCo:
      return std::log2(p_out * avg_snrs[0] + 1.0);
  }
  return 0.0;
}

double achievable_rate_exact(Combiner combiner, std::span<const double> avg_snrs,
                             double p_out, RateBracket bracket) {
  check_outage_target(p_out, "achievable_rate_exact");
  if (!(bracket.lo > 0.0 && bracket.hi > bracket.lo)) {
    throw DomainError("achievable_rate_exact: invalid rate bracket");
  }
  if (combiner == Combiner::kJD &&
      avg_snrs.size() > static_cast<std::size_t>(kMaxQuadratureLinks)) {
    throw DomainError("achievable_rate_exact: JD with " +
                      std::to_string(avg_snrs.size()) +
                      " links exceeds the quadrature range");
  }
  auto outage = [&](double rate) { return exact_outage(combiner, avg_snrs, rate); };
  const auto root = bisect_monotone(outage, p_out, bracket.lo, bracket.hi, kRateTolerance);
  if (!root) {
    throw DomainError("achievable_rate_exact: outage target " + std::to_string(p_out) +
                      " is not reachable for rates in [" + std::to_string(bracket.lo) +
                      ", " + std::to_string(bracket.hi) + "]");
  }
  return root->root;
}

ThroughputResult asymptotic_throughput(Combiner combiner, const Topology& topology,
                                       double p_out, InverseMode mode) {
  const auto snrs = average_snrs(topology);
  ThroughputResult r;
  r.achieved_rate = achievable_rate_asymptotic(combiner, snrs, p_out, mode);
  r.outage = p_out;
  r.throughput = throughput_from_rate(topology.bandwidth_hz(), r.achieved_rate, p_out);
  r.method = RateMethod::kAsymptotic;
  return r;
}

ThroughputResult exact_throughput(Combiner combiner, const Topology& topology,
                                  double p_out, RateBracket bracket) {
  const auto snrs = average_snrs(topology);
  ThroughputResult r;
  r.achieved_rate = achievable_rate_exact(combiner, snrs, p_out, bracket);
  r.outage = p_out;
  r.throughput = throughput_from_rate(topology.bandwidth_hz(), r.achieved_rate, p_out);
  r.method = RateMethod::kExactRoot;
  return r;
}

}  // namespace mcoutage
