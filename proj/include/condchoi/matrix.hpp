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
 * Dense row-major complex matrix. Products route through the dispatched
 * kernels in kernels.hpp.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace condchoi {

using cplx = std::complex<double>;

class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Throws DimensionMismatch unless entries.size() == rows * cols.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
    /// Nested row lists, e.g. {{1, 0}, {0, 1}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
    static ComplexMatrix diagonal(std::span<const double> diag);
    static ComplexMatrix diagonal(std::span<const cplx> diag);
    /// |i><j| of size n x n.
    static ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j);
    /// |v><v| for a column vector v.
    static ComplexMatrix outer(std::span<const cplx> v);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
    [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

    cplx &operator()(std::size_t r, std::size_t c) noexcept {
        return data_[r * cols_ + c];
    }
    const cplx &operator()(std::size_t r, std::size_t c) const noexcept {
        return data_[r * cols_ + c];
    }

    [[nodiscard]] std::span<cplx> data() noexcept { return data_; }
    [[nodiscard]] std::span<const cplx> data() const noexcept { return data_; }
    [[nodiscard]] std::span<const cplx> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }

    [[nodiscard]] ComplexMatrix adjoint() const;
    [[nodiscard]] ComplexMatrix transpose() const;
    [[nodiscard]] ComplexMatrix conj() const;
    [[nodiscard]] cplx trace() const;
    [[nodiscard]] std::vector<cplx> column(std::size_t c) const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        return a += b;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        return a -= b;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// Tr(a * b) without forming the product.
cplx trace_product(const ComplexMatrix &a, const ComplexMatrix &b);

/// a * b * a^dagger
ComplexMatrix sandwich(const ComplexMatrix &a, const ComplexMatrix &b);

/// max_ij |a_ij - b_ij|; DimensionMismatch on shape disagreement.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// max_ij |m_ij - conj(m_ji)|
double hermiticity_deviation(const ComplexMatrix &m);

double frobenius_norm(const ComplexMatrix &m);

} // namespace condchoi
