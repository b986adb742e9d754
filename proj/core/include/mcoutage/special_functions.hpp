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

#ifndef MCOUTAGE_SPECIAL_FUNCTIONS_HPP_
#define MCOUTAGE_SPECIAL_FUNCTIONS_HPP_

// Coding constant of joint decoding over N parallel Rayleigh links and the
// helpers needed to evaluate and invert it.
//
// The coding constant A_N(x) is the volume of the region
//   { g in R_+^N : sum_i log2(1 + g_i) <= x }
// and has the closed form
//   A_N(x) = (-1)^N (1 - 2^x e_N(-x ln 2)),
// with e_N the truncated exponential series. All functions here are pure and
// thread-safe.

#include "mcoutage/combiner.hpp"

namespace mcoutage {

// sum_{k=0}^{n-1} x^k / k!
double exp_sum(int n, double x);

// A_N(rate). Switches to the tail series when rate * ln 2 < 0.5 * n, where the
// closed form loses all significant digits to cancellation.
// Throws DomainError for n < 1 or rate < 0 (or NaN).
double coding_constant(int n, double rate);

// d/dx A_N(x) = 2^x ln2 (x ln2)^(n-1) / (n-1)!.
double coding_constant_derivative(int n, double rate);

namespace detail {
// The two evaluation branches of coding_constant, exposed for consistency tests.
double coding_constant_closed_form(int n, double rate);
double coding_constant_tail_series(int n, double rate);
}  // namespace detail

// ln z - ln ln z, the leading terms of the principal Lambert W branch for large
// arguments. Throws DomainError for z < e.
double lambert_w_asymptotic(double z);

// Principal branch W(z) for z >= e, seeded by lambert_w_asymptotic and
// polished with Halley steps to 1e-12 relative. Throws DomainError for z < e.
double lambert_w_upper_branch(double z);

enum class InverseMode {
  // Newton iteration on A_N(x) = y to 1e-10 relative residual.
  kRefined,
  // (N-1)/ln2 * [ln(zeta) - ln(ln(zeta))], zeta = ((N-1)! y)^(1/(N-1)) / (N-1).
  // Requires N >= 2 and zeta >= e.
  kLambertApprox,
};

// Rate x with A_N(x) = y. Refined mode accepts n >= 1 (n == 1 is log2(1 + y)).
// Throws DomainError for y <= 0 or an invalid approximation domain, and
// NumericError if the refined iteration stalls.
double coding_constant_inverse(int n, double y,
                               InverseMode mode = InverseMode::kRefined);

// Horizontal placement of the high-SNR outage curve:
//   JD 1/A_N^(1/N), SC 1/A_1, MRC (N!)^(1/N)/A_1, SCo 1/A_1 (N must be 1).
double coding_gain(Combiner combiner, int n, double rate);

// ln(n!) for small non-negative n.
double log_factorial(int n);

}  // namespace mcoutage

#endif  // MCOUTAGE_SPECIAL_FUNCTIONS_HPP_
