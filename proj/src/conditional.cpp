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

#include "condchoi/conditional.hpp"

#include "condchoi/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace condchoi {
namespace {

constexpr double kJoinTraceTol = 1e-8;

} // namespace

RankReport integer_rank(const ComplexMatrix &projector) {
    const double t = projector.trace().real();
    const double rounded = std::max(0.0, std::round(t));
    return {static_cast<std::size_t>(rounded), std::abs(t - rounded)};
}

ConditionalState::ConditionalState(AlgebraShape conditioning,
                                   AlgebraShape conditioned,
                                   ComplexMatrix matrix,
                                   const ConditionalTolerances &tol)
    : cond_(std::move(conditioning)), target_(std::move(conditioned)),
      matrix_(std::move(matrix)) {
    const std::size_t n = cond_.total_dim() * target_.total_dim();
    if (!matrix_.is_square() || matrix_.rows() != n) {
        throw Error(ErrorKind::DimensionMismatch,
                    "conditional matrix does not match " + to_string(target_) +
                        "|" + to_string(cond_));
    }
    const ConditionalCheck c = check_conditional(*this);
    if (!(c.hermiticity <= tol.hermitian)) {
        throw InvariantViolation("hermitian", c.hermiticity);
    }
    if (!(c.negativity <= tol.positivity)) {
        throw InvariantViolation("positive", c.negativity);
    }
    if (!(c.idempotence <= tol.idempotence)) {
        throw InvariantViolation("conditioning_projector", c.idempotence);
    }
    if (!(c.rank.deviation <= tol.integer_trace)) {
        throw InvariantViolation("integer_rank", c.rank.deviation);
    }
    if (!(c.support_deviation <= tol.support)) {
        throw InvariantViolation("block_support", c.support_deviation);
    }
}

ConditionalState::ConditionalState(AlgebraShape conditioning,
                                   AlgebraShape conditioned,
                                   ComplexMatrix matrix, NoCheck)
    : cond_(std::move(conditioning)), target_(std::move(conditioned)),
      matrix_(std::move(matrix)) {}

ConditionalState ConditionalState::unchecked(AlgebraShape conditioning,
                                             AlgebraShape conditioned,
                                             ComplexMatrix matrix) {
    return {std::move(conditioning), std::move(conditioned), std::move(matrix),
            NoCheck{}};
}

ComplexMatrix ConditionalState::conditioning_projector() const {
    return partial_trace(matrix_, cond_.total_dim(), target_.total_dim(),
                         Side::A);
}

RankReport ConditionalState::rank() const {
    return integer_rank(conditioning_projector());
}

ConditionalCheck check_conditional(const ConditionalState &c) {
    ConditionalCheck out;
    const ComplexMatrix &m = c.matrix();
    out.hermiticity = hermiticity_deviation(m);
    const ComplexMatrix sym = (m + m.adjoint()) * 0.5;
    out.negativity = std::max(0.0, -min_eigenvalue(sym));
    const ComplexMatrix p = c.conditioning_projector();
    out.idempotence = idempotence_deviation(p);
    out.rank = integer_rank(p);
    out.support_deviation =
        block_support_deviation(m, c.conditioning_shape(), c.conditioned_shape());
    return out;
}

ConditionalState conditional_from_joint(const JointState &j, Side condition_on) {
    const std::size_t da = j.shape_a().total_dim();
    const std::size_t db = j.shape_b().total_dim();
    const State marginal = reduce(j, condition_on);
    const ComplexMatrix inv_sqrt = gen_inv_sqrt(marginal.matrix());
    if (condition_on == Side::A) {
        const ComplexMatrix x = kron(inv_sqrt, ComplexMatrix::identity(db));
        return {j.shape_a(), j.shape_b(), x * j.matrix() * x};
    }
    const ComplexMatrix x = kron(ComplexMatrix::identity(da), inv_sqrt);
    ComplexMatrix on_ab = x * j.matrix() * x;
    return {j.shape_b(), j.shape_a(), swap_factors(on_ab, da, db)};
}

JointState joint_from_conditional(const State &marginal,
                                  const ConditionalState &cond) {
    if (!(marginal.shape() == cond.conditioning_shape())) {
        throw Error(ErrorKind::ShapeMismatch,
                    "marginal " + to_string(marginal.shape()) +
                        " vs conditioning " + to_string(cond.conditioning_shape()));
    }
    const ComplexMatrix root = mat_sqrt(marginal.matrix());
    const ComplexMatrix x =
        kron(root, ComplexMatrix::identity(cond.conditioned_shape().total_dim()));
    ComplexMatrix joint = x * cond.matrix() * x;
    const double dev = std::abs(joint.trace() - cplx{1.0});
    if (!(dev <= kJoinTraceTol)) {
        throw Error(ErrorKind::SupportMismatch,
                    "marginal support is not covered by the conditional; "
                    "trace deviates by " +
                        std::to_string(dev));
    }
    StateTolerances tol;
    tol.trace = kJoinTraceTol;
    return {marginal.shape(), cond.conditioned_shape(), std::move(joint), tol};
}

ConditionalState bayes_invert(const ConditionalState &cond_a_given_b,
                              const State &marginal_a, const State &marginal_b) {
    const AlgebraShape &shape_b = cond_a_given_b.conditioning_shape();
    const AlgebraShape &shape_a = cond_a_given_b.conditioned_shape();
    if (!(marginal_a.shape() == shape_a) || !(marginal_b.shape() == shape_b)) {
        throw Error(ErrorKind::ShapeMismatch,
                    "marginals do not match conditional " + to_string(shape_a) +
                        "|" + to_string(shape_b));
    }
    const std::size_t rank_b = numerical_rank(marginal_b.matrix());
    if (rank_b != shape_b.total_dim()) {
        throw Error(ErrorKind::SupportMismatch,
                    "Bayes inversion needs a full-rank rho_B (rank " +
                        std::to_string(rank_b) + " of " +
                        std::to_string(shape_b.total_dim()) + ")");
    }
    const std::size_t da = shape_a.total_dim();
    const std::size_t db = shape_b.total_dim();
    // rho_{A|B} back onto A (x) B.
    const ComplexMatrix on_ab = swap_factors(cond_a_given_b.matrix(), db, da);
    const ComplexMatrix x =
        kron(gen_inv_sqrt(marginal_a.matrix()), mat_sqrt(marginal_b.matrix()));
    return {shape_a, shape_b, x * on_ab * x};
}

} // namespace condchoi
