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

#include "wl1/support_set.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>

#include "wl1/rng.hpp"

namespace wl1 {

SupportSet::SupportSet(std::vector<int> indices, int ambient_n)
    : indices_(std::move(indices)), ambient_n_(ambient_n) {
  if (ambient_n_ < 1) {
    throw std::invalid_argument("SupportSet: ambient N must be positive");
  }
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()),
                 indices_.end());
  if (!indices_.empty() &&
      (indices_.front() < 0 || indices_.back() >= ambient_n_)) {
    throw std::invalid_argument("SupportSet: index out of range");
  }
}

bool SupportSet::contains(int i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

namespace {

void require_same_ambient(const SupportSet& a, const SupportSet& b) {
  if (a.ambient() != b.ambient()) {
    throw std::invalid_argument("support sets have different ambient N");
  }
}

}  // namespace

int intersection_size(const SupportSet& a, const SupportSet& b) {
  require_same_ambient(a, b);
  std::vector<int> out;
  std::set_intersection(a.indices().begin(), a.indices().end(),
                        b.indices().begin(), b.indices().end(),
                        std::back_inserter(out));
  return static_cast<int>(out.size());
}

SupportSet set_union(const SupportSet& a, const SupportSet& b) {
  require_same_ambient(a, b);
  std::vector<int> out;
  std::set_union(a.indices().begin(), a.indices().end(), b.indices().begin(),
                 b.indices().end(), std::back_inserter(out));
  return SupportSet(std::move(out), a.ambient());
}

SupportSet set_difference(const SupportSet& a, const SupportSet& b) {
  require_same_ambient(a, b);
  std::vector<int> out;
  std::set_difference(a.indices().begin(), a.indices().end(),
                      b.indices().begin(), b.indices().end(),
                      std::back_inserter(out));
  return SupportSet(std::move(out), a.ambient());
}

bool is_subset(const SupportSet& a, const SupportSet& b) {
  require_same_ambient(a, b);
  return std::includes(b.indices().begin(), b.indices().end(),
                       a.indices().begin(), a.indices().end());
}

int round_half_up(double x) { return static_cast<int>(std::floor(x + 0.5)); }

SupportSet best_k_support(const Vector& x, int k) {
  const int n = static_cast<int>(x.size());
  if (k < 0 || k > n) {
    throw std::invalid_argument("best_k_support: k out of range");
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&x](int a, int b) {
    return std::abs(x[a]) > std::abs(x[b]);
  });
  order.resize(static_cast<std::size_t>(k));
  return SupportSet(std::move(order), n);
}

EstimateMetrics estimate_metrics(const SupportSet& est, const SupportSet& t0,
                                 int k) {
  require_same_ambient(est, t0);
  if (k < 1) throw std::invalid_argument("estimate_metrics: k must be >= 1");
  EstimateMetrics m;
  m.alpha = est.is_empty() ? 0.0
                           : static_cast<double>(intersection_size(est, t0)) /
                                 static_cast<double>(est.size());
  m.rho = static_cast<double>(est.size()) / static_cast<double>(k);
  return m;
}

SupportSet synth_support_estimate(const SupportSet& t0, int size, double alpha,
                                  std::uint64_t seed) {
  if (size < 1) {
    throw std::invalid_argument("synth_support_estimate: size must be >= 1");
  }
  if (alpha < 0.0 || alpha > 1.0) {
    throw std::invalid_argument("synth_support_estimate: alpha outside [0,1]");
  }
  const int in_count = round_half_up(alpha * size);
  const int out_count = size - in_count;
  if (in_count > t0.size()) {
    throw std::invalid_argument(
        "synth_support_estimate: not enough true-support indices to draw");
  }
  if (out_count > t0.ambient() - t0.size()) {
    throw std::invalid_argument(
        "synth_support_estimate: not enough complement indices to draw");
  }
  std::vector<int> complement;
  complement.reserve(static_cast<std::size_t>(t0.ambient() - t0.size()));
  for (int i = 0; i < t0.ambient(); ++i) {
    if (!t0.contains(i)) complement.push_back(i);
  }
  Rng rng(seed);
  std::vector<int> picked = sample_without_replacement(t0.indices(), in_count, rng);
  const std::vector<int> outside =
      sample_without_replacement(std::move(complement), out_count, rng);
  picked.insert(picked.end(), outside.begin(), outside.end());
  return SupportSet(std::move(picked), t0.ambient());
}

std::pair<SupportSet, SupportSet> split_estimate_counts(const SupportSet& est,
                                                        const SupportSet& t0,
                                                        int size1, int in1,
                                                        std::uint64_t seed) {
  require_same_ambient(est, t0);
  if (size1 < 1 || size1 > est.size()) {
    throw std::invalid_argument("split_estimate: size1 out of range");
  }
  std::vector<int> inside;
  std::vector<int> outside;
  for (int i : est.indices()) {
    (t0.contains(i) ? inside : outside).push_back(i);
  }
  if (in1 < 0 || in1 > size1) {
    throw std::invalid_argument("split_estimate: overlap count out of range");
  }
  if (in1 > static_cast<int>(inside.size())) {
    throw std::invalid_argument(
        "split_estimate: estimate has too few true-support indices");
  }
  if (size1 - in1 > static_cast<int>(outside.size())) {
    throw std::invalid_argument(
        "split_estimate: estimate has too few off-support indices");
  }
  Rng rng(seed);
  std::vector<int> first = sample_without_replacement(std::move(inside), in1, rng);
  const std::vector<int> wrong =
      sample_without_replacement(std::move(outside), size1 - in1, rng);
  first.insert(first.end(), wrong.begin(), wrong.end());
  SupportSet t1(std::move(first), est.ambient());
  SupportSet t2 = set_difference(est, t1);
  return {std::move(t1), std::move(t2)};
}

std::pair<SupportSet, SupportSet> split_estimate(const SupportSet& est,
                                                 const SupportSet& t0,
                                                 int size1, double alpha1,
                                                 std::uint64_t seed) {
  if (alpha1 < 0.0 || alpha1 > 1.0) {
    throw std::invalid_argument("split_estimate: alpha1 outside [0,1]");
  }
  return split_estimate_counts(est, t0, size1, round_half_up(alpha1 * size1),
                               seed);
}

Vector assemble_weights(const WeightAssignment& assignment) {
  if (assignment.ambient_n < 1) {
    throw std::invalid_argument("assemble_weights: ambient N must be positive");
  }
  Vector w = Vector::Ones(assignment.ambient_n);
  std::vector<bool> taken(static_cast<std::size_t>(assignment.ambient_n),
                          false);
  for (const WeightedSet& ws : assignment.sets) {
    if (ws.set.ambient() != assignment.ambient_n) {
      throw std::invalid_argument("assemble_weights: ambient N mismatch");
    }
    if (ws.omega < 0.0 || ws.omega > 1.0) {
      throw std::invalid_argument("assemble_weights: omega outside [0,1]");
    }
    for (int i : ws.set.indices()) {
      if (taken[static_cast<std::size_t>(i)]) {
        throw std::invalid_argument(
            "assemble_weights: sets overlap at index " + std::to_string(i));
      }
      taken[static_cast<std::size_t>(i)] = true;
      w[i] = ws.omega;
    }
  }
  return w;
}

}  // namespace wl1
