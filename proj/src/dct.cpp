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

#include "wl1/dct.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace wl1 {
namespace {

// FFTW's REDFT10/REDFT01 are the unnormalized DCT-II/DCT-III; the orthonormal
// pair is obtained by rescaling coefficient 0 by 1/(2 sqrt(N)) and the rest by
// 1/sqrt(2N) (and the transposed scaling on the way back). Plans are cached
// per length; plan creation and execution share the plan's buffers, so both
// are serialized per plan. The planner itself is also not thread-safe, hence
// the global lock around creation.
struct DctPlans {
  explicit DctPlans(int n) : n(n) {
    in = fftw_alloc_real(static_cast<std::size_t>(n));
    out = fftw_alloc_real(static_cast<std::size_t>(n));
    forward = fftw_plan_r2r_1d(n, in, out, FFTW_REDFT10, FFTW_ESTIMATE);
    inverse = fftw_plan_r2r_1d(n, in, out, FFTW_REDFT01, FFTW_ESTIMATE);
    if (forward == nullptr || inverse == nullptr) {
      throw std::runtime_error("dct: fftw plan creation failed");
    }
  }
  ~DctPlans() {
    fftw_destroy_plan(forward);
    fftw_destroy_plan(inverse);
    fftw_free(in);
    fftw_free(out);
  }
  DctPlans(const DctPlans&) = delete;
  DctPlans& operator=(const DctPlans&) = delete;

  int n;
  double* in;
  double* out;
  fftw_plan forward;
  fftw_plan inverse;
  std::mutex mu;
};

DctPlans& plans_for(int n) {
  static std::mutex registry_mu;
  static std::map<int, std::unique_ptr<DctPlans>>* registry =
      new std::map<int, std::unique_ptr<DctPlans>>();
  std::lock_guard<std::mutex> lock(registry_mu);
  auto& slot = (*registry)[n];
  if (!slot) slot = std::make_unique<DctPlans>(n);
  return *slot;
}

}  // namespace

Vector dct_forward(const Vector& s) {
  const Index n = s.size();
  if (n < 1) throw std::invalid_argument("dct_forward: empty input");
  DctPlans& plans = plans_for(static_cast<int>(n));
  std::lock_guard<std::mutex> lock(plans.mu);
  for (Index i = 0; i < n; ++i) plans.in[i] = s[i];
  fftw_execute(plans.forward);
  Vector c(n);
  const double scale0 = 0.5 / std::sqrt(static_cast<double>(n));
  const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(n));
  c[0] = plans.out[0] * scale0;
  for (Index k = 1; k < n; ++k) c[k] = plans.out[k] * scale;
  return c;
}

Vector dct_inverse(const Vector& c) {
  const Index n = c.size();
  if (n < 1) throw std::invalid_argument("dct_inverse: empty input");
  DctPlans& plans = plans_for(static_cast<int>(n));
  std::lock_guard<std::mutex> lock(plans.mu);
  const double scale0 = 1.0 / std::sqrt(static_cast<double>(n));
  const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(n));
  plans.in[0] = c[0] * scale0;
  for (Index k = 1; k < n; ++k) plans.in[k] = c[k] * scale;
  fftw_execute(plans.inverse);
  Vector s(n);
  for (Index i = 0; i < n; ++i) s[i] = plans.out[i];
  return s;
}

}  // namespace wl1
