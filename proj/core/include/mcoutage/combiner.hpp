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

#ifndef MCOUTAGE_COMBINER_HPP_
#define MCOUTAGE_COMBINER_HPP_

#include <string_view>

namespace mcoutage {

// Receiver-side combining of the N parallel links.
//   kJD  - joint decoding, capacity sum_i log2(1 + g_i)
//   kSC  - selection combining, log2(1 + max_i g_i)
//   kMRC - maximal-ratio combining, log2(1 + sum_i g_i)
//   kSCo - single connectivity, evaluated on link 1 only
enum class Combiner { kJD, kSC, kMRC, kSCo };

std::string_view to_string(Combiner c);

// Accepts "jd", "sc", "mrc", "sco" in any letter case. Throws ValidationError.
Combiner parse_combiner(std::string_view name);

}  // namespace mcoutage

#endif  // MCOUTAGE_COMBINER_HPP_
