// Copyright 2026 The wl1 authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WL1_RNG_HPP_
#define WL1_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace wl1 {

// All randomness in the library flows through Rng so that a 64-bit seed fully
// determines every draw, and so that the draws can be reproduced outside C++.
// The generator is std::mt19937_64 (its output sequence is pinned down by the
// C++ standard); the distributions are fixed here rather than delegated to
// <random>, whose normal/uniform transforms are implementation-defined:
//
//   uniform01():        (next() >> 11) * 2^-53, in [0, 1)
//   normal():           Box-Muller, trigonometric form, second value cached:
//                         r = sqrt(-2 ln(1 - u1)), z = r cos(2 pi u2),
//                         spare = r sin(2 pi u2)
//   uniform_below(m):   rejection sampling on next() against the largest
//                       multiple of m below 2^64, then next() % m
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double normal();

  // Uniform integer in [0, m), m >= 1.
  std::uint64_t uniform_below(std::uint64_t m);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Stateless seed derivation for independent sub-streams: one splitmix64 step
// of base ^ (salt * 0x9E3779B97F4A7C15).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt);

// Draws `count` distinct elements from `pool` by partial Fisher-Yates and
// returns them sorted ascending. Requires count <= pool.size().
std::vector<int> sample_without_replacement(std::vector<int> pool, int count,
                                            Rng& rng);

}  // namespace wl1

#endif  // WL1_RNG_HPP_
