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

#ifndef MCOUTAGE_SELFTEST_HPP_
#define MCOUTAGE_SELFTEST_HPP_

// Built-in consistency suite: quadrature vs Monte-Carlo vs asymptote on a
// fixed grid, plus closed forms, bounds and inverse round trips.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace mcoutage {

struct SelftestOptions {
  // Multiplies every asymptotic value the suite compares against. Anything
  // other than 1 should make the suite fail (mutation check).
  double asymptote_scale = 1.0;
  std::uint64_t mc_samples = 400'000;
  std::uint64_t seed = 20240607;
};

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;
  bool all_passed() const;
};

SelftestReport run_selftest(const SelftestOptions& options = {});
// One "PASS name: detail" / "FAIL name: detail" line per check.
void print_report(const SelftestReport& report, std::ostream& out);

}  // namespace mcoutage

#endif  // MCOUTAGE_SELFTEST_HPP_
