// Copyright 2026 The condchoi Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Finite-dimensional C*-algebras B(C^d1) + ... + B(C^dn), represented as
 * block-diagonal matrices on C^(d1+...+dn). Blocks appear in declaration
 * order; they are never sorted.
 *
 * Composite algebras A (x) B are kept as flat (dA*dB)-square matrices in the
 * kron layout of linalg.hpp together with both factor shapes. Note that the
 * blocks of the composite are generally not contiguous in that layout, so
 * composite block support is always tested factor-wise.
 */
#pragma once

#include "condchoi/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace condchoi {

class AlgebraShape {
  public:
    /// InvalidArgument on an empty list or a zero block.
    explicit AlgebraShape(std::vector<std::size_t> block_dims);

    /// B(C^d)
    static AlgebraShape irreducible(std::size_t d);
    /// B(C)^{+n}
    static AlgebraShape classical(std::size_t n);

    [[nodiscard]] const std::vector<std::size_t> &blocks() const noexcept {
        return dims_;
    }
    [[nodiscard]] std::size_t num_blocks() const noexcept { return dims_.size(); }
    [[nodiscard]] std::size_t total_dim() const noexcept { return total_; }
    [[nodiscard]] bool is_classical() const noexcept;
    [[nodiscard]] bool is_irreducible() const noexcept { return dims_.size() == 1; }
    /// First embedded index of block j.
    [[nodiscard]] std::size_t offset(std::size_t j) const { return offsets_.at(j); }
    /// Block that embedded basis index i belongs to.
    [[nodiscard]] std::size_t block_of(std::size_t i) const {
        return labels_.at(i);
    }
    [[nodiscard]] bool same_block(std::size_t i, std::size_t k) const {
        return labels_.at(i) == labels_.at(k);
    }

    friend bool operator==(const AlgebraShape &a, const AlgebraShape &b) {
        return a.dims_ == b.dims_;
    }

  private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> labels_;
    std::size_t total_ = 0;
};

std::string to_string(const AlgebraShape &shape);

class AlgebraElement {
  public:
    /// Throws DimensionMismatch when the block list does not fit the shape.
    AlgebraElement(AlgebraShape shape, std::vector<ComplexMatrix> blocks);

    [[nodiscard]] const AlgebraShape &shape() const noexcept { return shape_; }
    [[nodiscard]] const std::vector<ComplexMatrix> &blocks() const noexcept {
        return blocks_;
    }
    [[nodiscard]] const ComplexMatrix &block(std::size_t j) const {
        return blocks_.at(j);
    }

    friend bool operator==(const AlgebraElement &,
                           const AlgebraElement &) = default;

  private:
    AlgebraShape shape_;
    std::vector<ComplexMatrix> blocks_;
};

/// Block-diagonal total_dim x total_dim matrix.
ComplexMatrix embed(const AlgebraElement &e);

/// sum_j P_j m P_j returned as blocks. DimensionMismatch if m does not match.
AlgebraElement project(const ComplexMatrix &m, const AlgebraShape &shape);

/// sum_j P_j m P_j kept in embedded form.
ComplexMatrix project_embedded(const ComplexMatrix &m, const AlgebraShape &shape);

/// (P_A (x) P_B)(m) on the kron layout.
ComplexMatrix project_tensor(const ComplexMatrix &m, const AlgebraShape &a,
                             const AlgebraShape &b);

/// Largest entry that the projection would zero out.
double block_support_deviation(const ComplexMatrix &m, const AlgebraShape &shape);
double block_support_deviation(const ComplexMatrix &m, const AlgebraShape &a,
                               const AlgebraShape &b);

/// Block dims d_i * e_j in lexicographic (i, j) order.
AlgebraShape tensor_shape(const AlgebraShape &a, const AlgebraShape &b);

AlgebraElement algebra_identity(const AlgebraShape &shape);

} // namespace condchoi
