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

#ifndef MCOUTAGE_ROOT_FINDING_HPP_
#define MCOUTAGE_ROOT_FINDING_HPP_

#include <cmath>
#include <optional>

namespace mcoutage {

struct BisectionResult {
  double root;
  int iterations;
};

// Solves f(x) = target for f monotone (either direction) on [lo, hi] until the
// bracket is narrower than x_tol. Returns nullopt when [lo, hi] does not
// bracket the target.
template <class F>
std::optional<BisectionResult> bisect_monotone(F&& f, double target, double lo,
                                               double hi, double x_tol,
                                               int max_iterations = 200) {
  double f_lo = f(lo) - target;
  const double f_hi = f(hi) - target;
  if (f_lo == 0.0) return BisectionResult{lo, 0};
  if (f_hi == 0.0) return BisectionResult{hi, 0};
  if ((f_lo < 0.0) == (f_hi < 0.0)) return std::nullopt;

  int it = 0;
  while (hi - lo > x_tol && it < max_iterations) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid) - target;
    ++it;
    if (f_mid == 0.0) return BisectionResult{mid, it};
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return BisectionResult{0.5 * (lo + hi), it};
}

}  // namespace mcoutage

#endif  // MCOUTAGE_ROOT_FINDING_HPP_
