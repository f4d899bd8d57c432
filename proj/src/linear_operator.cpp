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

#include "wl1/linear_operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "wl1/dct.hpp"
#include "wl1/rng.hpp"

namespace wl1 {

void require_finite(const Vector& v, const char* name) {
  if (!v.allFinite()) {
    throw std::invalid_argument(std::string(name) +
                                ": entries must be finite");
  }
}

DenseOperator::DenseOperator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() < 1 || m_.cols() < 1) {
    throw std::invalid_argument("DenseOperator: dimensions must be positive");
  }
  if (!m_.allFinite()) {
    throw std::invalid_argument("DenseOperator: entries must be finite");
  }
}

DenseOperator::DenseOperator(DenseOperator&& other) noexcept
    : m_(std::move(other.m_)) {
  std::lock_guard<std::mutex> lock(other.svd_mu_);
  svd_ = std::move(other.svd_);
}

Vector DenseOperator::apply(const Vector& x) const {
  if (x.size() != m_.cols()) {
    throw std::invalid_argument("DenseOperator::apply: length mismatch");
  }
  return m_ * x;
}

Vector DenseOperator::apply_adjoint(const Vector& v) const {
  if (v.size() != m_.rows()) {
    throw std::invalid_argument(
        "DenseOperator::apply_adjoint: length mismatch");
  }
  return m_.transpose() * v;
}

const DenseSvd& DenseOperator::svd() const {
  std::lock_guard<std::mutex> lock(svd_mu_);
  if (!svd_) {
    Eigen::BDCSVD<Matrix> solver(m_, Eigen::ComputeFullU | Eigen::ComputeThinV);
    auto result = std::make_shared<DenseSvd>();
    result->u = solver.matrixU();
    result->sigma = solver.singularValues();
    result->v = solver.matrixV();
    svd_ = std::move(result);
  }
  return *svd_;
}

DenseOperator make_gaussian_matrix(Index n, Index big_n, std::uint64_t seed) {
  if (n < 1 || big_n < 1) {
    throw std::invalid_argument(
        "make_gaussian_matrix: dimensions must be positive");
  }
  if (n > big_n) {
    throw std::invalid_argument(
        "make_gaussian_matrix: requires n <= N (underdetermined or square)");
  }
  Rng rng(seed);
  const double stddev = 1.0 / std::sqrt(static_cast<double>(n));
  Matrix m(n, big_n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < big_n; ++j) {
      m(i, j) = stddev * rng.normal();
    }
  }
  return DenseOperator(std::move(m));
}

RestrictedDctSynthesisOperator::RestrictedDctSynthesisOperator(
    std::vector<int> kept_indices, Index big_n)
    : kept_(std::move(kept_indices)), n_(big_n) {
  if (n_ < 1) {
    throw std::invalid_argument(
        "RestrictedDctSynthesisOperator: N must be positive");
  }
  if (kept_.empty()) {
    throw std::invalid_argument(
        "RestrictedDctSynthesisOperator: kept_indices must be nonempty");
  }
  std::sort(kept_.begin(), kept_.end());
  for (std::size_t i = 0; i < kept_.size(); ++i) {
    if (kept_[i] < 0 || kept_[i] >= n_) {
      throw std::invalid_argument(
          "RestrictedDctSynthesisOperator: index out of range");
    }
    if (i > 0 && kept_[i] == kept_[i - 1]) {
      throw std::invalid_argument(
          "RestrictedDctSynthesisOperator: duplicate index");
    }
  }
}

Vector RestrictedDctSynthesisOperator::apply(const Vector& coeffs) const {
  if (coeffs.size() != n_) {
    throw std::invalid_argument(
        "RestrictedDctSynthesisOperator::apply: length mismatch");
  }
  const Vector full = dct_inverse(coeffs);
  Vector out(static_cast<Index>(kept_.size()));
  for (std::size_t i = 0; i < kept_.size(); ++i) out[static_cast<Index>(i)] = full[kept_[i]];
  return out;
}

Vector RestrictedDctSynthesisOperator::apply_adjoint(const Vector& v) const {
  if (v.size() != static_cast<Index>(kept_.size())) {
    throw std::invalid_argument(
        "RestrictedDctSynthesisOperator::apply_adjoint: length mismatch");
  }
  Vector full = Vector::Zero(n_);
  for (std::size_t i = 0; i < kept_.size(); ++i) full[kept_[i]] = v[static_cast<Index>(i)];
  return dct_forward(full);
}

RestrictedDctSynthesisOperator make_restricted_synthesis_operator(
    std::vector<int> kept_indices, Index big_n) {
  return RestrictedDctSynthesisOperator(std::move(kept_indices), big_n);
}

}  // namespace wl1
