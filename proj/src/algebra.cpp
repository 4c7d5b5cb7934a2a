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

#include "condchoi/algebra.hpp"

#include "condchoi/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace condchoi {
namespace {

void require_dim(const ComplexMatrix &m, std::size_t n, const char *op) {
    if (!m.is_square() || m.rows() != n) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(op) + ": expected " + std::to_string(n) + "x" +
                        std::to_string(n) + ", got " +
                        std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()));
    }
}

} // namespace

AlgebraShape::AlgebraShape(std::vector<std::size_t> block_dims)
    : dims_(std::move(block_dims)) {
    if (dims_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "algebra shape has no blocks");
    }
    offsets_.reserve(dims_.size());
    for (std::size_t j = 0; j < dims_.size(); ++j) {
        if (dims_[j] == 0) {
            throw Error(ErrorKind::InvalidArgument,
                        "algebra block " + std::to_string(j) + " has dimension 0");
        }
        offsets_.push_back(total_);
        labels_.insert(labels_.end(), dims_[j], j);
        total_ += dims_[j];
    }
}

AlgebraShape AlgebraShape::irreducible(std::size_t d) {
    return AlgebraShape({d});
}

AlgebraShape AlgebraShape::classical(std::size_t n) {
    return AlgebraShape(std::vector<std::size_t>(n, 1));
}

bool AlgebraShape::is_classical() const noexcept {
    return std::all_of(dims_.begin(), dims_.end(),
                       [](std::size_t d) { return d == 1; });
}

std::string to_string(const AlgebraShape &shape) {
    std::string s = "(";
    for (std::size_t j = 0; j < shape.num_blocks(); ++j) {
        if (j) {
            s += ",";
        }
        s += std::to_string(shape.blocks()[j]);
    }
    return s + ")";
}

AlgebraElement::AlgebraElement(AlgebraShape shape,
                               std::vector<ComplexMatrix> blocks)
    : shape_(std::move(shape)), blocks_(std::move(blocks)) {
    if (blocks_.size() != shape_.num_blocks()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "expected " + std::to_string(shape_.num_blocks()) +
                        " blocks, got " + std::to_string(blocks_.size()));
    }
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        require_dim(blocks_[j], shape_.blocks()[j], "algebra element block");
    }
}

ComplexMatrix embed(const AlgebraElement &e) {
    const AlgebraShape &shape = e.shape();
    ComplexMatrix out(shape.total_dim(), shape.total_dim());
    for (std::size_t j = 0; j < shape.num_blocks(); ++j) {
        const std::size_t off = shape.offset(j);
        const ComplexMatrix &b = e.block(j);
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(off + r, off + c) = b(r, c);
            }
        }
    }
    return out;
}

AlgebraElement project(const ComplexMatrix &m, const AlgebraShape &shape) {
    require_dim(m, shape.total_dim(), "project");
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(shape.num_blocks());
    for (std::size_t j = 0; j < shape.num_blocks(); ++j) {
        const std::size_t d = shape.blocks()[j];
        const std::size_t off = shape.offset(j);
        ComplexMatrix b(d, d);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                b(r, c) = m(off + r, off + c);
            }
        }
        blocks.push_back(std::move(b));
    }
    return {shape, std::move(blocks)};
}

ComplexMatrix project_embedded(const ComplexMatrix &m, const AlgebraShape &shape) {
    require_dim(m, shape.total_dim(), "project");
    ComplexMatrix out(m);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!shape.same_block(r, c)) {
                out(r, c) = 0.0;
            }
        }
    }
    return out;
}

ComplexMatrix project_tensor(const ComplexMatrix &m, const AlgebraShape &a,
                             const AlgebraShape &b) {
    const std::size_t db = b.total_dim();
    require_dim(m, a.total_dim() * db, "project_tensor");
    ComplexMatrix out(m);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!a.same_block(r / db, c / db) || !b.same_block(r % db, c % db)) {
                out(r, c) = 0.0;
            }
        }
    }
    return out;
}

double block_support_deviation(const ComplexMatrix &m, const AlgebraShape &shape) {
    require_dim(m, shape.total_dim(), "block_support_deviation");
    double worst = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!shape.same_block(r, c)) {
                worst = std::max(worst, std::abs(m(r, c)));
            }
        }
    }
    return worst;
}

double block_support_deviation(const ComplexMatrix &m, const AlgebraShape &a,
                               const AlgebraShape &b) {
    return max_abs_diff(m, project_tensor(m, a, b));
}

AlgebraShape tensor_shape(const AlgebraShape &a, const AlgebraShape &b) {
    std::vector<std::size_t> dims;
    dims.reserve(a.num_blocks() * b.num_blocks());
    for (std::size_t da : a.blocks()) {
        for (std::size_t db : b.blocks()) {
            dims.push_back(da * db);
        }
    }
    return AlgebraShape(std::move(dims));
}

AlgebraElement algebra_identity(const AlgebraShape &shape) {
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(shape.num_blocks());
    for (std::size_t d : shape.blocks()) {
        blocks.push_back(ComplexMatrix::identity(d));
    }
    return {shape, std::move(blocks)};
}

} // namespace condchoi
