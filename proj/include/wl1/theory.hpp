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

#ifndef WL1_THEORY_HPP_
#define WL1_THEORY_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "wl1/linear_operator.hpp"
#include "wl1/types.hpp"

namespace wl1 {

// Hypothetical restricted-isometry constants of a measurement matrix at
// orders a*k and (a+1)*k, for some aspect parameter a > 1. These are inputs
// the caller asserts, not quantities we compute (computing them exactly is
// intractable); see estimate_rip_delta_lower_bound for the empirical side.
struct RipParams {
  RipParams(double a, double delta_ak, double delta_a1k);
  double a;
  double delta_ak;
  double delta_a1k;
};

// Per-set description of a support estimate: relative size rho = |T|/k,
// accuracy alpha = fraction of the set that lies in the true support, and the
// weight omega applied on it.
struct SupportSetParams {
  double rho;
  double alpha;
  double omega;
};

using SupportEstimateProfile = std::vector<SupportSetParams>;

// Aggregate multiplier of a multi-set weighted-l1 profile:
//   gamma = sum_j omega_j - (m - 1)
//         + sum_j (1 - omega_j) sqrt(1 + rho_j - 2 alpha_j rho_j).
// With m = 1 this reduces to omega + (1 - omega) sqrt(1 + rho - 2 alpha rho),
// the single-estimate multiplier; with all omega_j = 1 it equals 1.
double gamma(const SupportEstimateProfile& profile);

// Sufficient RIP level for stable recovery: (a - gamma^2) / (a + gamma^2).
// May be negative, meaning no RIP constant satisfies the condition.
double sufficient_delta_bound(double gamma, double a);

// Whether delta_ak + (a / gamma^2) delta_a1k < a / gamma^2 - 1 holds
// strictly. gamma = 0 is treated as the limit: satisfied whenever
// delta_a1k < 1.
bool check_rip_condition(const SupportEstimateProfile& profile,
                         const RipParams& rip);

// Stability/robustness constants
//   C0 = 2 (1 + gamma / sqrt(a)) / D
//   C1 = 2 a^{-1/2} (sqrt(1 - delta_a1k) + sqrt(1 + delta_ak)) / D
// with D = sqrt(1 - delta_a1k) - (gamma / sqrt(a)) sqrt(1 + delta_ak).
// Throws if D <= 0 (the bounds are vacuous there).
std::pair<double, double> error_constants(double gamma, const RipParams& rip);

// Null-space-property constant
//   c0 = 1 + sqrt(1 + delta_ak) / (sqrt(a) sqrt(1 - delta_a1k)),
// valid under delta_a1k < (a - 1) / (a + 1).
double nsp_constant(const RipParams& rip);

// Dominance factor for partial support recovery, eta = 2 c0 / (2 - c0);
// requires c0 < 2.
double eta(const RipParams& rip);

// The same eta written directly in the RIP constants:
//   2 (sqrt(a) sqrt(1 - delta_a1k) + sqrt(1 + delta_ak))
//   / (sqrt(a) sqrt(1 - delta_a1k) - sqrt(1 + delta_ak)).
// Kept as an independent route for consistency checks.
double eta_rip_form(const RipParams& rip);

// True iff the s-th largest magnitude of x is at least
// (eta + 1) * (l1 mass of x outside its top-k entries), i.e. x is in the
// class whose top-s support survives into the top-k support of the plain-l1
// reconstruction.
bool check_signal_class(const Vector& x, int k, int s, double eta);

// Accuracy threshold ((p - 1) / (eta + 1))^{1/p} for power-law signals
// |x(j)| = c j^{-p}: above it, shrinking the estimate raises its accuracy.
double power_law_threshold(double p, double eta);

// Weight choice minimizing gamma set by set: 0 where alpha > 0.5, else 1
// (the slope of gamma in omega_j changes sign at alpha_j = 0.5; the tie at
// exactly 0.5 goes to 1, the no-trust default).
std::vector<double> optimal_weights(const std::vector<double>& alphas);

// Monte-Carlo lower bound on the restricted isometry constant delta_k of a
// dense operator: the max over sampled k-column submatrices of
// max(sigma_max^2 - 1, 1 - sigma_min^2). Sampling is sequential in one
// stream, so for a fixed seed the bound is nondecreasing in `trials`.
double estimate_rip_delta_lower_bound(const DenseOperator& a, int k,
                                      int trials, std::uint64_t seed);

// Everything above evaluated on one profile + RIP hypothesis. c0_bound and
// c1_bound are NaN when the condition fails (the bounds are vacuous).
struct TheoryReport {
  double gamma;
  double delta_hat;
  double c0_bound;
  double c1_bound;
  bool condition_holds;
};

TheoryReport theory_report(const SupportEstimateProfile& profile,
                           const RipParams& rip);

}  // namespace wl1

#endif  // WL1_THEORY_HPP_
