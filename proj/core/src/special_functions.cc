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

#include "mcoutage/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mcoutage/error.hpp"

namespace mcoutage {
namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr int kMaxInverseIterations = 200;
constexpr double kInverseResidual = 1e-10;

void check_rate(int n, double rate, const char* who) {
  if (n < 1) {
    throw DomainError(std::string(who) + ": number of links must be >= 1, got " +
                      std::to_string(n));
  }
  if (!(rate >= 0.0)) {
    throw DomainError(std::string(who) + ": rate must be >= 0, got " +
                      std::to_string(rate));
  }
}

bool use_tail_series(int n, double rate) { return rate * kLn2 < 0.5 * n; }

}  // namespace

double exp_sum(int n, double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < n; ++k) {
    term *= x / k;
    sum += term;
  }
  return sum;
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

namespace detail {

double coding_constant_closed_form(int n, double rate) {
  const double inner = 1.0 - std::exp2(rate) * exp_sum(n, -rate * kLn2);
  return (n % 2 == 0) ? inner : -inner;
}

double coding_constant_tail_series(int n, double rate) {
  // 1 = 2^x e^(-x ln2), so A_N = 2^x sum_{k>=N} (-1)^(N+k) y^k / k!, y = x ln2.
  const double y = rate * kLn2;
  if (y == 0.0) return 0.0;
  double term = std::exp(n * std::log(y) - log_factorial(n));
  double sum = term;
  for (int k = n + 1; k < n + 400; ++k) {
    term *= -y / k;
    if (std::abs(term) < 1e-16 * std::abs(sum)) break;
    sum += term;
  }
  return std::exp2(rate) * sum;
}

}  // namespace detail

double coding_constant(int n, double rate) {
  check_rate(n, rate, "coding_constant");
  if (rate == 0.0) return 0.0;
  if (n == 1) return std::expm1(rate * kLn2);
  return use_tail_series(n, rate) ? detail::coding_constant_tail_series(n, rate)
                                  : detail::coding_constant_closed_form(n, rate);
}

double coding_constant_derivative(int n, double rate) {
  check_rate(n, rate, "coding_constant_derivative");
  if (n == 1) return kLn2 * std::exp2(rate);
  if (rate == 0.0) return 0.0;
  const double y = rate * kLn2;
  return kLn2 * std::exp(rate * kLn2 + (n - 1) * std::log(y) - log_factorial(n - 1));
}

double lambert_w_asymptotic(double z) {
  if (!(z >= std::numbers::e)) {
    throw DomainError("lambert_w: argument must be >= e, got " + std::to_string(z));
  }
  const double lz = std::log(z);
  return lz - std::log(lz);
}

double lambert_w_upper_branch(double z) {
  double w = lambert_w_asymptotic(z);
  // ln ln z vanishes at z = e, where the asymptotic form is exact.
  for (int i = 0; i < 64; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double wp1 = w + 1.0;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 1e-12 * std::abs(w)) return w;
  }
  throw NumericError("lambert_w: Halley iteration did not converge for z = " +
                     std::to_string(z));
}

namespace {

// log(zeta) for the Lambert approximation, computed without forming (N-1)! y.
double log_zeta(int n, double y) {
  const int a = n - 1;
  return (log_factorial(a) + std::log(y)) / a - std::log(static_cast<double>(a));
}

double lambert_approx_inverse(int n, double y) {
  if (n < 2) {
    throw DomainError("coding_constant_inverse: approximation needs n >= 2");
  }
  const double lz = log_zeta(n, y);
  if (!(lz >= 1.0)) {
    throw DomainError(
        "coding_constant_inverse: approximation requires zeta >= e (y too small)");
  }
  return (n - 1) / kLn2 * (lz - std::log(lz));
}

double refined_inverse(int n, double y) {
  if (n == 1) return std::log2(1.0 + y);

  // Bracket [lo, hi] keeps the Newton iterates honest; A_N is strictly
  // increasing so bisection on the bracket always makes progress.
  double lo = 0.0;
  double hi = 1.0;
  while (coding_constant(n, hi) < y) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) {
      throw NumericError("coding_constant_inverse: target out of range");
    }
  }

  double x = 1.0;
  if (log_zeta(n, y) >= 1.0) x = lambert_approx_inverse(n, y);
  if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);

  const double log_y = std::log(y);
  for (int iter = 0; iter < kMaxInverseIterations; ++iter) {
    const double a = coding_constant(n, x);
    if (std::abs(a - y) < kInverseResidual * y) return x;
    if (a < y) {
      lo = x;
    } else {
      hi = x;
    }
    // Newton on log A_N: the log is close to linear in log x for small rates
    // and close to linear in x for large rates.
    const double slope = coding_constant_derivative(n, x) / a;
    double next = x - (std::log(a) - log_y) / slope;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    if (next == x) return x;
    x = next;
  }
  throw NumericError("coding_constant_inverse: no convergence after " +
                     std::to_string(kMaxInverseIterations) + " iterations for y = " +
                     std::to_string(y));
}

}  // namespace

double coding_constant_inverse(int n, double y, InverseMode mode) {
  if (n < 1) {
    throw DomainError("coding_constant_inverse: number of links must be >= 1");
  }
  if (!(y > 0.0) || !std::isfinite(y)) {
    throw DomainError("coding_constant_inverse: y must be positive and finite, got " +
                      std::to_string(y));
  }
  return mode == InverseMode::kRefined ? refined_inverse(n, y)
                                       : lambert_approx_inverse(n, y);
}

double coding_gain(Combiner combiner, int n, double rate) {
  if (!(rate > 0.0)) throw DomainError("coding_gain: rate must be > 0");
  if (n < 1) throw DomainError("coding_gain: number of links must be >= 1");
  const double a1 = coding_constant(1, rate);
  switch (combiner) {
    case Combiner::kJD:
      return std::pow(coding_constant(n, rate), -1.0 / n);
    case Combiner::kSC:
      return 1.0 / a1;
    case Combiner::kMRC:
      return std::exp(log_factorial(n) / n) / a1;
    case Combiner::kSCo:
      if (n != 1) throw DomainError("coding_gain: SCo is defined for n = 1 only");
      return 1.0 / a1;
  }
  return 0.0;
}

}  // namespace mcoutage
