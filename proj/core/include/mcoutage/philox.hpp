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

#ifndef MCOUTAGE_PHILOX_HPP_
#define MCOUTAGE_PHILOX_HPP_

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
//
// A block of four 32-bit outputs is a pure function of a 128-bit counter and a
// 64-bit key, so independent streams are obtained by giving each work chunk
// its own counter range. Results do not depend on the order in which chunks
// are generated.

#include <array>
#include <cstdint>

namespace mcoutage {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key);

// Sequential view over one (seed, stream) pair. Stream 0..2^64-1 selects the
// high half of the counter; the low half advances with each block.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  // Uniform on (0, 1] with 53 random bits; never returns 0.
  double next_open_unit();

  // Standard normal via Box-Muller on two open-unit draws.
  double next_normal();

 private:
  void refill();

  PhiloxKey key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  PhiloxCounter buffer_{};
  int used_ = 4;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace mcoutage

#endif  // MCOUTAGE_PHILOX_HPP_
