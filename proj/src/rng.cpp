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

#include "wl1/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace wl1 {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - uniform01() lies in (0, 1], keeping the log finite.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

std::uint64_t Rng::uniform_below(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("uniform_below: m must be >= 1");
  if ((m & (m - 1)) == 0) return next() & (m - 1);  // power of two
  // Largest multiple of m representable is 2^64 - r with r = 2^64 mod m.
  const std::uint64_t r = (0 - m) % m;
  const std::uint64_t limit = 0 - r;  // wraps to 2^64 - r
  std::uint64_t x = next();
  while (limit != 0 && x >= limit) x = next();
  return x % m;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  std::uint64_t z = base + salt * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<int> sample_without_replacement(std::vector<int> pool, int count,
                                            Rng& rng) {
  if (count < 0 || static_cast<std::size_t>(count) > pool.size()) {
    throw std::invalid_argument(
        "sample_without_replacement: count out of range");
  }
  for (int i = 0; i < count; ++i) {
    const auto j =
        i + static_cast<int>(rng.uniform_below(pool.size() - static_cast<std::size_t>(i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(count));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace wl1
