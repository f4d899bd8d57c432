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

#include "wl1/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wl1/rng.hpp"

namespace wl1 {

RipParams::RipParams(double a, double delta_ak, double delta_a1k)
    : a(a), delta_ak(delta_ak), delta_a1k(delta_a1k) {
  if (!(a > 1.0)) throw std::invalid_argument("RipParams: a must be > 1");
  if (!(delta_ak >= 0.0 && delta_ak < 1.0) ||
      !(delta_a1k >= 0.0 && delta_a1k < 1.0)) {
    throw std::invalid_argument("RipParams: deltas must lie in [0, 1)");
  }
}

namespace {

void validate_profile(const SupportEstimateProfile& profile) {
  if (profile.empty()) {
    throw std::invalid_argument("profile must contain at least one set");
  }
  for (const SupportSetParams& s : profile) {
    if (!(s.rho >= 0.0)) {
      throw std::invalid_argument("profile: rho must be >= 0");
    }
    if (!(s.alpha >= 0.0 && s.alpha <= 1.0)) {
      throw std::invalid_argument("profile: alpha must lie in [0, 1]");
    }
    if (!(s.omega >= 0.0 && s.omega <= 1.0)) {
      throw std::invalid_argument("profile: omega must lie in [0, 1]");
    }
  }
}

}  // namespace

double gamma(const SupportEstimateProfile& profile) {
  validate_profile(profile);
  double omega_sum = 0.0;
  double radical_sum = 0.0;
  for (const SupportSetParams& s : profile) {
    const double radicand = 1.0 + s.rho - 2.0 * s.alpha * s.rho;
    if (radicand < 0.0) {
      // Unreachable while alpha <= 1, but guarded: sqrt of a negative
      // radicand would silently poison everything downstream.
      throw std::domain_error("gamma: negative radicand");
    }
    omega_sum += s.omega;
    radical_sum += (1.0 - s.omega) * std::sqrt(radicand);
  }
  return omega_sum - (static_cast<double>(profile.size()) - 1.0) + radical_sum;
}

double sufficient_delta_bound(double gamma, double a) {
  if (!(a > 1.0)) {
    throw std::invalid_argument("sufficient_delta_bound: a must be > 1");
  }
  return (a - gamma * gamma) / (a + gamma * gamma);
}

bool check_rip_condition(const SupportEstimateProfile& profile,
                         const RipParams& rip) {
  const double g = gamma(profile);
  if (g == 0.0) return rip.delta_a1k < 1.0;
  const double ratio = rip.a / (g * g);
  return rip.delta_ak + ratio * rip.delta_a1k < ratio - 1.0;
}

std::pair<double, double> error_constants(double gamma, const RipParams& rip) {
  const double sqrt_a = std::sqrt(rip.a);
  const double low = std::sqrt(1.0 - rip.delta_a1k);
  const double high = std::sqrt(1.0 + rip.delta_ak);
  const double denom = low - (gamma / sqrt_a) * high;
  if (!(denom > 0.0)) {
    throw std::domain_error(
        "error_constants: condition violated, bounds vacuous");
  }
  const double c0 = 2.0 * (1.0 + gamma / sqrt_a) / denom;
  const double c1 = 2.0 * (low + high) / (sqrt_a * denom);
  return {c0, c1};
}

double nsp_constant(const RipParams& rip) {
  if (!(rip.delta_a1k < (rip.a - 1.0) / (rip.a + 1.0))) {
    throw std::domain_error(
        "nsp_constant: requires delta_(a+1)k < (a-1)/(a+1)");
  }
  return 1.0 + std::sqrt(1.0 + rip.delta_ak) /
                   (std::sqrt(rip.a) * std::sqrt(1.0 - rip.delta_a1k));
}

double eta(const RipParams& rip) {
  const double c0 = nsp_constant(rip);
  if (!(c0 < 2.0)) throw std::domain_error("eta: requires c0 < 2");
  return 2.0 * c0 / (2.0 - c0);
}

double eta_rip_form(const RipParams& rip) {
  const double root = std::sqrt(rip.a) * std::sqrt(1.0 - rip.delta_a1k);
  const double high = std::sqrt(1.0 + rip.delta_ak);
  if (!(root > high)) throw std::domain_error("eta_rip_form: requires c0 < 2");
  return 2.0 * (root + high) / (root - high);
}

bool check_signal_class(const Vector& x, int k, int s, double eta) {
  const int n = static_cast<int>(x.size());
  if (k < 1 || k > n) {
    throw std::invalid_argument("check_signal_class: k out of range");
  }
  if (s < 1 || s > k) {
    throw std::invalid_argument("check_signal_class: requires 1 <= s <= k");
  }
  if (!(eta > 0.0)) {
    throw std::invalid_argument("check_signal_class: eta must be > 0");
  }
  std::vector<double> mags(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) mags[static_cast<std::size_t>(i)] = std::abs(x[i]);
  std::sort(mags.begin(), mags.end(), std::greater<double>());
  double tail = 0.0;
  for (int i = k; i < n; ++i) tail += mags[static_cast<std::size_t>(i)];
  return mags[static_cast<std::size_t>(s - 1)] >= (eta + 1.0) * tail;
}

double power_law_threshold(double p, double eta) {
  if (!(p > 1.0)) {
    throw std::invalid_argument("power_law_threshold: p must be > 1");
  }
  if (!(eta > 0.0)) {
    throw std::invalid_argument("power_law_threshold: eta must be > 0");
  }
  return std::pow((p - 1.0) / (eta + 1.0), 1.0 / p);
}

std::vector<double> optimal_weights(const std::vector<double>& alphas) {
  std::vector<double> w;
  w.reserve(alphas.size());
  for (double alpha : alphas) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
      throw std::invalid_argument("optimal_weights: alpha outside [0, 1]");
    }
    w.push_back(alpha > 0.5 ? 0.0 : 1.0);
  }
  return w;
}

double estimate_rip_delta_lower_bound(const DenseOperator& a, int k,
                                      int trials, std::uint64_t seed) {
  const int n = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  if (k > cols) {
    throw std::invalid_argument("estimate_rip_delta_lower_bound: k > N");
  }
  if (k < 1 || k > n) {
    throw std::invalid_argument(
        "estimate_rip_delta_lower_bound: requires 1 <= k <= n");
  }
  if (trials < 1) {
    throw std::invalid_argument(
        "estimate_rip_delta_lower_bound: trials must be >= 1");
  }
  const Matrix& m = *a.dense_matrix();
  std::vector<int> all(static_cast<std::size_t>(cols));
  for (int i = 0; i < cols; ++i) all[static_cast<std::size_t>(i)] = i;
  Rng rng(seed);
  double bound = 0.0;
  Matrix sub(n, k);
  for (int t = 0; t < trials; ++t) {
    const std::vector<int> support = sample_without_replacement(all, k, rng);
    for (int j = 0; j < k; ++j) {
      sub.col(j) = m.col(support[static_cast<std::size_t>(j)]);
    }
    const Vector sv = sub.jacobiSvd().singularValues();
    const double hi = sv[0] * sv[0] - 1.0;
    const double lo = 1.0 - sv[sv.size() - 1] * sv[sv.size() - 1];
    bound = std::max({bound, hi, lo});
  }
  return bound;
}

TheoryReport theory_report(const SupportEstimateProfile& profile,
                           const RipParams& rip) {
  TheoryReport report{};
  report.gamma = gamma(profile);
  report.delta_hat = sufficient_delta_bound(report.gamma, rip.a);
  report.condition_holds = check_rip_condition(profile, rip);
  try {
    const auto [c0, c1] = error_constants(report.gamma, rip);
    report.c0_bound = c0;
    report.c1_bound = c1;
  } catch (const std::domain_error&) {
    report.c0_bound = std::numeric_limits<double>::quiet_NaN();
    report.c1_bound = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

}  // namespace wl1
