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

#ifndef WL1_SUPPORT_SET_HPP_
#define WL1_SUPPORT_SET_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "wl1/types.hpp"

namespace wl1 {

// Set of signal indices in an ambient dimension N. Stored sorted and
// deduplicated so set algebra is canonical.
class SupportSet {
 public:
  SupportSet(std::vector<int> indices, int ambient_n);

  static SupportSet empty(int ambient_n) { return SupportSet({}, ambient_n); }

  const std::vector<int>& indices() const { return indices_; }
  int ambient() const { return ambient_n_; }
  int size() const { return static_cast<int>(indices_.size()); }
  bool is_empty() const { return indices_.empty(); }
  bool contains(int i) const;

  bool operator==(const SupportSet& other) const = default;

 private:
  std::vector<int> indices_;
  int ambient_n_;
};

int intersection_size(const SupportSet& a, const SupportSet& b);
SupportSet set_union(const SupportSet& a, const SupportSet& b);
SupportSet set_difference(const SupportSet& a, const SupportSet& b);
bool is_subset(const SupportSet& a, const SupportSet& b);  // a subset of b

// Indices of the k largest |x_i|; magnitude ties break toward the lower
// index, so the result is deterministic.
SupportSet best_k_support(const Vector& x, int k);

struct EstimateMetrics {
  double alpha;  // |est within t0| / |est|, 0 for an empty estimate
  double rho;    // |est| / k
};

// Accuracy and relative size of a support estimate against the true support
// t0 of the best k-term approximation. Requires k >= 1.
EstimateMetrics estimate_metrics(const SupportSet& est, const SupportSet& t0,
                                 int k);

// Builds a support estimate of the given size whose overlap with t0 is
// exactly round(alpha * size) (round half up), with members drawn uniformly
// from t0 and its complement. Deterministic per seed.
SupportSet synth_support_estimate(const SupportSet& t0, int size, double alpha,
                                  std::uint64_t seed);

// Splits est into (t1, t2): t1 of the given size with exactly
// round(alpha1 * size1) members inside t0, t2 = est \ t1.
std::pair<SupportSet, SupportSet> split_estimate(const SupportSet& est,
                                                 const SupportSet& t0,
                                                 int size1, double alpha1,
                                                 std::uint64_t seed);

// Same split with the in-t0 overlap of t1 given as an explicit count.
std::pair<SupportSet, SupportSet> split_estimate_counts(const SupportSet& est,
                                                        const SupportSet& t0,
                                                        int size1, int in1,
                                                        std::uint64_t seed);

struct WeightedSet {
  SupportSet set;
  double omega;
};

// Disjoint sets, each carrying a weight in [0, 1]; everything outside their
// union gets weight 1.
struct WeightAssignment {
  std::vector<WeightedSet> sets;
  int ambient_n;
};

// Expands the assignment into a length-N weight vector. Throws if two sets
// overlap, naming the first colliding index.
Vector assemble_weights(const WeightAssignment& assignment);

int round_half_up(double x);

}  // namespace wl1

#endif  // WL1_SUPPORT_SET_HPP_
