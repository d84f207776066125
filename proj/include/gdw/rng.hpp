// Copyright 2026 The gdw authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GDW_RNG_HPP
#define GDW_RNG_HPP

#include <cstdint>

namespace gdw {

// Counter-based random stream. word(i) depends only on (seed, i), so draws
// may happen in any order and from any thread without coordination; results
// are identical regardless of how work is partitioned.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t word(std::uint64_t index) const {
    std::uint64_t z = seed_ + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double unit(std::uint64_t index) const {
    return static_cast<double>(word(index) >> 11) * 0x1.0p-53;
  }

  // Uniform over {0, ..., 2^nbits - 1}; nbits in [1, 64].
  std::uint64_t bits(std::uint64_t index, int nbits) const {
    return word(index) >> (64 - nbits);
  }

 private:
  std::uint64_t seed_;
};

}  // namespace gdw

#endif  // GDW_RNG_HPP
