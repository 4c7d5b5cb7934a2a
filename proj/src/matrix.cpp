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

#include "condchoi/matrix.hpp"

#include "condchoi/error.hpp"
#include "condchoi/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace condchoi {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NotHermitian:
        return "NotHermitian";
    case ErrorKind::NoConvergence:
        return "NoConvergence";
    case ErrorKind::NotPositive:
        return "NotPositive";
    case ErrorKind::DimensionMismatch:
        return "DimensionMismatch";
    case ErrorKind::ShapeMismatch:
        return "ShapeMismatch";
    case ErrorKind::SupportMismatch:
        return "SupportMismatch";
    case ErrorKind::SupportViolation:
        return "SupportViolation";
    case ErrorKind::NotTracePreserving:
        return "NotTracePreserving";
    case ErrorKind::BasisNotPOVM:
        return "BasisNotPOVM";
    case ErrorKind::InvariantViolation:
        return "InvariantViolation";
    case ErrorKind::InvalidArgument:
        return "InvalidArgument";
    case ErrorKind::SyntaxError:
        return "SyntaxError";
    }
    return "Unknown";
}

InvariantViolation::InvariantViolation(std::string invariant, double deviation)
    : Error(ErrorKind::InvariantViolation,
            invariant + " (deviation " + std::to_string(deviation) + ")"),
      invariant_(std::move(invariant)), deviation_(deviation) {}

namespace {

void require_same_dims(const ComplexMatrix &a, const ComplexMatrix &b,
                       const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " vs " +
                        std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw Error(ErrorKind::DimensionMismatch,
                    "entry count " + std::to_string(data_.size()) +
                        " does not match " + std::to_string(rows) + "x" +
                        std::to_string(cols));
    }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw Error(ErrorKind::DimensionMismatch, "ragged initializer");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
    return {rows, cols};
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    ComplexMatrix m(n, n);
    m(i, j) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> v) {
    ComplexMatrix m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            m(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix out(*this);
    for (auto &z : out.data_) {
        z = std::conj(z);
    }
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t{};
    const std::size_t n = std::min(rows_, cols_);
    for (std::size_t i = 0; i < n; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

std::vector<cplx> ComplexMatrix::column(std::size_t c) const {
    std::vector<cplx> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_dims(*this, other, "operator+=");
    kernels::active().axpy(1.0, other.data_.data(), data_.data(), data_.size());
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_dims(*this, other, "operator-=");
    kernels::active().axpy(-1.0, other.data_.data(), data_.data(), data_.size());
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx s) {
    kernels::active().scale(s, data_.data(), data_.data(), data_.size());
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "matrix product " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " * " +
                        std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
    }
    ComplexMatrix c(a.rows(), b.cols());
    kernels::active().gemm(a.data_.data(), b.data_.data(), c.data_.data(),
                           a.rows(), a.cols(), b.cols());
    return c;
}

cplx trace_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "trace_product");
    }
    const ComplexMatrix bt = b.transpose();
    return kernels::active().dotu(a.data().data(), bt.data().data(), a.size());
}

ComplexMatrix sandwich(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a * b * a.adjoint();
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dims(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

double hermiticity_deviation(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw Error(ErrorKind::DimensionMismatch, "hermiticity of non-square");
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = r; c < m.cols(); ++c) {
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return worst;
}

double frobenius_norm(const ComplexMatrix &m) {
    double s = 0.0;
    for (const auto &z : m.data()) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

} // namespace condchoi
