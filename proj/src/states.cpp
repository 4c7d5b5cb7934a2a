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

#include "condchoi/states.hpp"

#include "condchoi/error.hpp"

#include <algorithm>
#include <cmath>

namespace condchoi {
namespace {

StateCheck check_common(const ComplexMatrix &m, double support_dev) {
    StateCheck c;
    c.hermiticity = hermiticity_deviation(m);
    c.support_deviation = support_dev;
    c.trace_deviation = std::abs(m.trace() - cplx{1.0});
    // Symmetrize so the spectrum is defined even when Hermiticity fails.
    const ComplexMatrix sym = (m + m.adjoint()) * 0.5;
    c.negativity = std::max(0.0, -min_eigenvalue(sym));
    return c;
}

} // namespace

StateCheck check_state_matrix(const ComplexMatrix &m, const AlgebraShape &shape) {
    return check_common(m, block_support_deviation(m, shape));
}

StateCheck check_state_matrix(const ComplexMatrix &m, const AlgebraShape &a,
                              const AlgebraShape &b) {
    return check_common(m, block_support_deviation(m, a, b));
}

void enforce(const StateCheck &check, const StateTolerances &tol) {
    if (!(check.hermiticity <= tol.hermitian)) {
        throw InvariantViolation("hermitian", check.hermiticity);
    }
    if (!(check.negativity <= tol.positivity)) {
        throw InvariantViolation("positive", check.negativity);
    }
    if (!(check.trace_deviation <= tol.trace)) {
        throw InvariantViolation("trace", check.trace_deviation);
    }
    if (!(check.support_deviation <= tol.support)) {
        throw InvariantViolation("block_support", check.support_deviation);
    }
}

State::State(AlgebraShape shape, ComplexMatrix matrix, const StateTolerances &tol)
    : shape_(std::move(shape)), matrix_(std::move(matrix)) {
    if (!matrix_.is_square() || matrix_.rows() != shape_.total_dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "state matrix does not match shape " + to_string(shape_));
    }
    enforce(check_state_matrix(matrix_, shape_), tol);
}

State::State(AlgebraShape shape, ComplexMatrix matrix, NoCheck)
    : shape_(std::move(shape)), matrix_(std::move(matrix)) {}

State State::unchecked(AlgebraShape shape, ComplexMatrix matrix) {
    return {std::move(shape), std::move(matrix), NoCheck{}};
}

State State::maximally_mixed(const AlgebraShape &shape) {
    const auto d = static_cast<double>(shape.total_dim());
    return {shape, ComplexMatrix::identity(shape.total_dim()) * (1.0 / d)};
}

State State::from_element(const AlgebraElement &e) {
    return {e.shape(), embed(e)};
}

JointState::JointState(AlgebraShape a, AlgebraShape b, ComplexMatrix matrix,
                       const StateTolerances &tol)
    : a_(std::move(a)), b_(std::move(b)), matrix_(std::move(matrix)) {
    const std::size_t n = a_.total_dim() * b_.total_dim();
    if (!matrix_.is_square() || matrix_.rows() != n) {
        throw Error(ErrorKind::DimensionMismatch,
                    "joint state matrix does not match " + to_string(a_) +
                        " (x) " + to_string(b_));
    }
    enforce(check_state_matrix(matrix_, a_, b_), tol);
}

JointState::JointState(AlgebraShape a, AlgebraShape b, ComplexMatrix matrix,
                       NoCheck)
    : a_(std::move(a)), b_(std::move(b)), matrix_(std::move(matrix)) {}

JointState JointState::unchecked(AlgebraShape a, AlgebraShape b,
                                 ComplexMatrix matrix) {
    return {std::move(a), std::move(b), std::move(matrix), NoCheck{}};
}

JointState JointState::product(const State &a, const State &b) {
    return {a.shape(), b.shape(), kron(a.matrix(), b.matrix())};
}

State reduce(const JointState &j, Side keep) {
    ComplexMatrix m = partial_trace(j.matrix(), j.shape_a().total_dim(),
                                    j.shape_b().total_dim(), keep);
    return {j.shape(keep), std::move(m)};
}

State transpose_in_basis(const State &s) {
    return {s.shape(), s.matrix().transpose()};
}

bool is_classical(const State &s, double tol) {
    const ComplexMatrix &m = s.matrix();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (r != c && std::abs(m(r, c)) > tol) {
                return false;
            }
        }
    }
    return true;
}

} // namespace condchoi
