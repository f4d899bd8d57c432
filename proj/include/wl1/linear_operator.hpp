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

#ifndef WL1_LINEAR_OPERATOR_HPP_
#define WL1_LINEAR_OPERATOR_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "wl1/types.hpp"

namespace wl1 {

// Abstract n x N measurement operator. Implementations are immutable after
// construction and safe for concurrent read-only use.
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;

  virtual Index rows() const = 0;
  virtual Index cols() const = 0;

  // y = A x, x of length cols().
  virtual Vector apply(const Vector& x) const = 0;

  // z = A^T v, v of length rows().
  virtual Vector apply_adjoint(const Vector& v) const = 0;

  // Entry access for operators backed by an explicit matrix; nullptr for
  // matrix-free operators.
  virtual const Matrix* dense_matrix() const { return nullptr; }

  // True when A A^T = I holds exactly by construction.
  virtual bool has_orthonormal_rows() const { return false; }
};

// Singular value decomposition A = U diag(sigma) V^T with U square
// (rows x rows), sigma descending of length min(rows, cols), V of size
// cols x min(rows, cols).
struct DenseSvd {
  Matrix u;
  Vector sigma;
  Matrix v;
};

// Operator backed by an explicit dense matrix.
class DenseOperator final : public LinearOperator {
 public:
  explicit DenseOperator(Matrix m);

  Index rows() const override { return m_.rows(); }
  Index cols() const override { return m_.cols(); }
  Vector apply(const Vector& x) const override;
  Vector apply_adjoint(const Vector& v) const override;
  const Matrix* dense_matrix() const override { return &m_; }

  // SVD of the matrix, computed on first use and cached.
  const DenseSvd& svd() const;

  DenseOperator(DenseOperator&& other) noexcept;
  DenseOperator(const DenseOperator&) = delete;
  DenseOperator& operator=(const DenseOperator&) = delete;
  DenseOperator& operator=(DenseOperator&&) = delete;

 private:
  Matrix m_;
  mutable std::mutex svd_mu_;
  mutable std::shared_ptr<const DenseSvd> svd_;
};

// Dense operator with entries drawn i.i.d. from N(0, 1/n); the 1/n variance
// makes k-sparse vectors nearly norm-preserved without column rescaling.
// Entries are generated in row-major order from Rng(seed), so a fixed seed
// yields a bit-identical matrix. Requires 1 <= n <= N.
DenseOperator make_gaussian_matrix(Index n, Index big_n, std::uint64_t seed);

// Measurement operator of the audio experiment: c -> (inverse DCT of c)
// restricted to kept_indices. Rows are orthonormal, so A A^T = I.
class RestrictedDctSynthesisOperator final : public LinearOperator {
 public:
  // kept_indices must be distinct values in [0, big_n); they are kept in
  // sorted order.
  RestrictedDctSynthesisOperator(std::vector<int> kept_indices, Index big_n);

  Index rows() const override { return static_cast<Index>(kept_.size()); }
  Index cols() const override { return n_; }
  Vector apply(const Vector& coeffs) const override;
  Vector apply_adjoint(const Vector& v) const override;
  bool has_orthonormal_rows() const override { return true; }

  const std::vector<int>& kept_indices() const { return kept_; }

 private:
  std::vector<int> kept_;
  Index n_;
};

RestrictedDctSynthesisOperator make_restricted_synthesis_operator(
    std::vector<int> kept_indices, Index big_n);

}  // namespace wl1

#endif  // WL1_LINEAR_OPERATOR_HPP_
