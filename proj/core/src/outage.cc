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

#include "mcoutage/outage.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "mcoutage/error.hpp"
#include "mcoutage/parallel.hpp"
#include "mcoutage/quadrature.hpp"
#include "mcoutage/special_functions.hpp"

namespace mcoutage {
namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kEqualGap = 1e-9;
constexpr double kDistinctGap = 1e-4;
// exp(-g/mean) underflows beyond this many means.
constexpr double kTailCutoff = 745.0;

void check_snrs(std::span<const double> avg_snrs, const char* who) {
  if (avg_snrs.empty()) {
    throw DomainError(std::string(who) + ": need at least one link");
  }
  for (double g : avg_snrs) {
    if (!(g > 0.0) || !std::isfinite(g)) {
      throw DomainError(std::string(who) + ": average SNRs must be positive, got " +
                        std::to_string(g));
    }
  }
}

void check_rate(double rate, const char* who) {
  if (!(rate >= 0.0) || !std::isfinite(rate)) {
    throw DomainError(std::string(who) + ": rate must be >= 0, got " +
                      std::to_string(rate));
  }
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

// Pr[g < limit] for g exponential with the given mean.
double exp_cdf(double limit, double mean) {
  return limit <= 0.0 ? 0.0 : -std::expm1(-limit / mean);
}

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Regularized lower incomplete gamma P(n, a) for integer n, i.e. the
// equal-SNR MRC outage 1 - e^-a sum_{i<n} a^i/i!.
double erlang_cdf(int n, double a) {
  if (a <= 0.0) return 0.0;
  if (a < n) {
    // Tail series e^-a sum_{k>=n} a^k/k! avoids cancelling against 1.
    double term = std::exp(n * std::log(a) - a - log_factorial(n));
    double sum = term;
    for (int k = n + 1; k < n + 2000; ++k) {
      term *= a / k;
      sum += term;
      if (term < 1e-17 * sum) break;
    }
    return clamp_unit(sum);
  }
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < n; ++k) {
    term *= a / k;
    sum += term;
  }
  return clamp_unit(1.0 - std::exp(-a) * sum);
}

struct NestedState {
  std::span<const double> snrs;
  QuadratureOptions options;
  bool converged = true;
  int worst_intervals = 0;
};

// JD: level k integrates link k over g < exp(budget) - 1, where budget is the
// remaining rate in nats.
double jd_level(NestedState& st, std::size_t k, double budget) {
  if (budget <= 0.0) return 0.0;
  const double limit = std::expm1(budget);
  const double mean = st.snrs[k];
  if (k + 1 == st.snrs.size()) return exp_cdf(limit, mean);
  auto integrand = [&](double g) {
    return std::exp(-g / mean) / mean * jd_level(st, k + 1, budget - std::log1p(g));
  };
  const QuadratureResult r =
      integrate_gk15(integrand, 0.0, std::min(limit, kTailCutoff * mean), st.options);
  if (!r.converged) st.converged = false;
  st.worst_intervals = std::max(st.worst_intervals, r.intervals);
  return r.value;
}

// MRC: level k integrates link k over g < remaining sum budget.
double sum_level(NestedState& st, std::size_t k, double budget) {
  if (budget <= 0.0) return 0.0;
  const double mean = st.snrs[k];
  if (k + 1 == st.snrs.size()) return exp_cdf(budget, mean);
  auto integrand = [&](double g) {
    return std::exp(-g / mean) / mean * sum_level(st, k + 1, budget - g);
  };
  const QuadratureResult r =
      integrate_gk15(integrand, 0.0, std::min(budget, kTailCutoff * mean), st.options);
  if (!r.converged) st.converged = false;
  st.worst_intervals = std::max(st.worst_intervals, r.intervals);
  return r.value;
}

bool all_equal(std::span<const double> v) {
  return classify_mrc_spacing(v) == MrcSpacing::kEqual;
}

OutageEstimate make(double value, OutageMethod method) {
  OutageEstimate e;
  e.saturated = value > 1.0;
  e.value = clamp_unit(value);
  e.method = method;
  return e;
}

}  // namespace

std::string_view to_string(OutageMethod m) {
  switch (m) {
    case OutageMethod::kExact:
      return "exact";
    case OutageMethod::kQuadrature:
      return "quadrature";
    case OutageMethod::kMonteCarlo:
      return "monte-carlo";
    case OutageMethod::kAsymptotic:
      return "asymptotic";
    case OutageMethod::kBoundLower:
      return "bound-lower";
    case OutageMethod::kBoundUpper:
      return "bound-upper";
  }
  return "?";
}

double instantaneous_capacity(Combiner combiner, std::span<const double> gammas) {
  if (gammas.empty()) throw DomainError("instantaneous_capacity: no links");
  for (double g : gammas) {
    if (!(g >= 0.0)) {
      throw DomainError("instantaneous_capacity: SNR must be >= 0, got " +
                        std::to_string(g));
    }
  }
  switch (combiner) {
    case Combiner::kSC:
      return std::log2(1.0 + *std::max_element(gammas.begin(), gammas.end()));
    case Combiner::kMRC:
      return std::log2(1.0 + std::accumulate(gammas.begin(), gammas.end(), 0.0));
    case Combiner::kJD: {
      double c = 0.0;
      for (double g : gammas) c += std::log1p(g);
      return c / kLn2;
    }
    case Combiner::kSCo:
      return std::log2(1.0 + gammas[0]);
  }
  return 0.0;
}

OutageEstimate outage_monte_carlo(Combiner combiner, std::span<const double> avg_snrs,
                                  double rate, std::uint64_t samples,
                                  std::uint64_t seed, unsigned workers) {
  check_snrs(avg_snrs, "outage_monte_carlo");
  check_rate(rate, "outage_monte_carlo");
  if (samples < kMinMonteCarloSamples) {
    throw DomainError("outage_monte_carlo: need at least " +
                      std::to_string(kMinMonteCarloSamples) + " samples");
  }
  OutageEstimate est;
  est.method = OutageMethod::kMonteCarlo;
  est.sample_count = samples;
  if (rate == 0.0) {
    est.ci_half_width = 0.0;
    est.outage_events = 0;
    est.low_event_count = true;
    return est;
  }

  // C < R is tested against thresholds instead of taking logs per sample:
  // max/sum/first < 2^R - 1 and prod(1 + g) < 2^R.
  const double sum_limit = std::expm1(rate * kLn2);
  const double prod_limit = std::exp2(rate);
  const std::size_t n = avg_snrs.size();
  const std::size_t chunks = (samples + kSampleChunkSize - 1) / kSampleChunkSize;
  std::vector<std::uint64_t> events(chunks, 0);

  parallel_for(chunks, workers, [&](std::size_t c) {
    const std::size_t first = c * kSampleChunkSize;
    const std::size_t rows = std::min<std::uint64_t>(kSampleChunkSize, samples - first);
    std::vector<double> buf(rows * n);
    sample_chunk(avg_snrs, seed, c, rows, buf);
    std::uint64_t hits = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      const double* g = &buf[r * n];
      bool outage = false;
      switch (combiner) {
        case Combiner::kSCo:
          outage = g[0] < sum_limit;
          break;
        case Combiner::kSC:
          outage = *std::max_element(g, g + n) < sum_limit;
          break;
        case Combiner::kMRC: {
          double s = 0.0;
          for (std::size_t i = 0; i < n; ++i) s += g[i];
          outage = s < sum_limit;
          break;
        }
        case Combiner::kJD: {
          double p = 1.0;
          for (std::size_t i = 0; i < n; ++i) p *= 1.0 + g[i];
          outage = p < prod_limit;
          break;
        }
      }
      hits += outage ? 1 : 0;
    }
    events[c] = hits;
  });

  const std::uint64_t total = std::accumulate(events.begin(), events.end(), std::uint64_t{0});
  const double m = static_cast<double>(samples);
  const double p = static_cast<double>(total) / m;
  est.value = p;
  est.outage_events = total;
  est.ci_half_width = 1.96 * std::sqrt(p * (1.0 - p) / m);
  est.low_event_count = total < kMinReliableOutageEvents;
  return est;
}

OutageEstimate outage_monte_carlo(Combiner combiner, const Topology& topology,
                                  double rate, std::uint64_t samples,
                                  std::uint64_t seed, unsigned workers) {
  const auto snrs = average_snrs(topology);
  return outage_monte_carlo(combiner, snrs, rate, samples, seed, workers);
}

OutageEstimate outage_jd_quadrature(std::span<const double> avg_snrs, double rate,
                                    double rel_tol) {
  check_snrs(avg_snrs, "outage_jd_quadrature");
  check_rate(rate, "outage_jd_quadrature");
  if (avg_snrs.size() > static_cast<std::size_t>(kMaxQuadratureLinks)) {
    throw DomainError("outage_jd_quadrature: unsupported number of links " +
                      std::to_string(avg_snrs.size()) + " (max " +
                      std::to_string(kMaxQuadratureLinks) + "; use Monte-Carlo)");
  }
  if (!(rel_tol >= 1e-10 && rel_tol <= 1e-3)) {
    throw DomainError("outage_jd_quadrature: rel_tol must lie in [1e-10, 1e-3]");
  }
  NestedState st{avg_snrs, {}, true, 0};
  st.options.rel_tol = rel_tol / static_cast<double>(avg_snrs.size());
  const double value = jd_level(st, 0, rate * kLn2);
  if (!st.converged) {
    throw NumericError("outage_jd_quadrature: tolerance " + std::to_string(rel_tol) +
                       " not achieved");
  }
  return make(value, OutageMethod::kQuadrature);
}

double log_outage_asymptote(Combiner combiner, std::span<const double> avg_snrs,
                            double rate) {
  check_snrs(avg_snrs, "outage_asymptotic");
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw DomainError("outage_asymptotic: rate must be > 0");
  }
  const int n = static_cast<int>(avg_snrs.size());
  double log_prod = 0.0;
  for (double g : avg_snrs) log_prod += std::log(g);
  const double log_a1 = std::log(coding_constant(1, rate));
  switch (combiner) {
    case Combiner::kJD:
      return std::log(coding_constant(n, rate)) - log_prod;
    case Combiner::kSC:
      return n * log_a1 - log_prod;
    case Combiner::kMRC:
      return n * log_a1 - log_factorial(n) - log_prod;
    case Combiner::kSCo:
      return log_a1 - std::log(avg_snrs[0]);
  }
  return 0.0;
}

OutageEstimate outage_asymptotic(Combiner combiner, std::span<const double> avg_snrs,
                                 double rate) {
  const double value = std::exp(log_outage_asymptote(combiner, avg_snrs, rate));
  OutageMethod method = OutageMethod::kAsymptotic;
  if (combiner == Combiner::kMRC && !all_equal(avg_snrs)) {
    method = OutageMethod::kBoundUpper;
  }
  return make(value, method);
}

MrcSpacing classify_mrc_spacing(std::span<const double> avg_snrs) {
  double max_gap = 0.0;
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < avg_snrs.size(); ++i) {
    for (std::size_t j = i + 1; j < avg_snrs.size(); ++j) {
      const double gap = std::abs(avg_snrs[i] - avg_snrs[j]) /
                         std::max(avg_snrs[i], avg_snrs[j]);
      max_gap = std::max(max_gap, gap);
      min_gap = std::min(min_gap, gap);
    }
  }
  if (max_gap < kEqualGap) return MrcSpacing::kEqual;
  if (min_gap > kDistinctGap) return MrcSpacing::kDistinct;
  return MrcSpacing::kNearDegenerate;
}

OutageEstimate outage_mrc_convolution(std::span<const double> avg_snrs, double rate,
                                      double rel_tol) {
  check_snrs(avg_snrs, "outage_mrc_convolution");
  check_rate(rate, "outage_mrc_convolution");
  NestedState st{avg_snrs, {}, true, 0};
  st.options.rel_tol = rel_tol / static_cast<double>(avg_snrs.size());
  const double value = sum_level(st, 0, coding_constant(1, rate));
  if (!st.converged) {
    throw NumericError("outage_mrc_convolution: tolerance not achieved");
  }
  return make(value, OutageMethod::kQuadrature);
}

OutageEstimate outage_exact_closed(Combiner combiner, std::span<const double> avg_snrs,
                                   double rate, const ExactOptions& options) {
  check_snrs(avg_snrs, "outage_exact_closed");
  check_rate(rate, "outage_exact_closed");
  const double a1 = coding_constant(1, rate);
  const std::size_t n = avg_snrs.size();
  switch (combiner) {
    case Combiner::kJD:
      throw DomainError(
          "outage_exact_closed: JD has no closed form; use quadrature or Monte-Carlo");
    case Combiner::kSCo:
      return make(exp_cdf(a1, avg_snrs[0]), OutageMethod::kExact);
    case Combiner::kSC: {
      double p = 1.0;
      for (double g : avg_snrs) p *= exp_cdf(a1, g);
      return make(p, OutageMethod::kExact);
    }
    case Combiner::kMRC:
      break;
  }

  if (n == 1) return make(exp_cdf(a1, avg_snrs[0]), OutageMethod::kExact);
  switch (classify_mrc_spacing(avg_snrs)) {
    case MrcSpacing::kEqual: {
      const double mean =
          std::accumulate(avg_snrs.begin(), avg_snrs.end(), 0.0) / static_cast<double>(n);
      return make(erlang_cdf(static_cast<int>(n), a1 / mean), OutageMethod::kExact);
    }
    case MrcSpacing::kDistinct: {
      CompensatedSum sum;
      for (std::size_t i = 0; i < n; ++i) {
        double term = std::pow(avg_snrs[i], static_cast<double>(n - 1)) *
                      exp_cdf(a1, avg_snrs[i]);
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i) term /= avg_snrs[i] - avg_snrs[j];
        }
        sum.add(term);
      }
      return make(clamp_unit(sum.value()), OutageMethod::kExact);
    }
    case MrcSpacing::kNearDegenerate:
      if (!options.allow_convolution_fallback) {
        throw DomainError(
            "outage_exact_closed: MRC average SNRs are neither equal nor well "
            "separated and the convolution fallback is disabled");
      }
      return outage_mrc_convolution(avg_snrs, rate, options.convolution_rel_tol);
  }
  return {};
}

OutageEstimate outage_jd_lower_bound_tse(double avg_snr, int n, double rate) {
  if (n < 1) throw DomainError("outage_jd_lower_bound_tse: n must be >= 1");
  const double g[1] = {avg_snr};
  check_snrs(g, "outage_jd_lower_bound_tse");
  check_rate(rate, "outage_jd_lower_bound_tse");
  const double per_link = exp_cdf(coding_constant(1, rate / n), avg_snr);
  return make(std::pow(per_link, n), OutageMethod::kBoundLower);
}

OutageEstimate mrc_simplex_bound(std::span<const double> avg_snrs, double rate) {
  const double value = std::exp(log_outage_asymptote(Combiner::kMRC, avg_snrs, rate));
  return make(value, OutageMethod::kBoundUpper);
}

}  // namespace mcoutage
