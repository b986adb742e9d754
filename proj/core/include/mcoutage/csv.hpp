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

#ifndef MCOUTAGE_CSV_HPP_
#define MCOUTAGE_CSV_HPP_

// Minimal CSV plumbing shared by the trace reader and the table writers.
// Fields are unquoted; commas inside fields are not supported.

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace mcoutage {

// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

std::vector<std::string_view> split_fields(std::string_view line);

std::string_view trim(std::string_view s);

// Parses a complete field as a double / signed integer; false on failure.
bool parse_double(std::string_view s, double& out);
bool parse_int64(std::string_view s, long long& out);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& os) const;
};

}  // namespace mcoutage

#endif  // MCOUTAGE_CSV_HPP_
