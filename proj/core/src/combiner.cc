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

#include "mcoutage/combiner.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "mcoutage/error.hpp"

namespace mcoutage {

std::string_view to_string(Combiner c) {
  switch (c) {
    case Combiner::kJD:
      return "jd";
    case Combiner::kSC:
      return "sc";
    case Combiner::kMRC:
      return "mrc";
    case Combiner::kSCo:
      return "sco";
  }
  return "?";
}

Combiner parse_combiner(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "jd") return Combiner::kJD;
  if (lower == "sc") return Combiner::kSC;
  if (lower == "mrc") return Combiner::kMRC;
  if (lower == "sco") return Combiner::kSCo;
  throw ValidationError("unknown combiner '" + std::string(name) +
                        "' (expected jd|sc|mrc|sco)");
}

}  // namespace mcoutage
