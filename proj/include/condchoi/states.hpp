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
 * Density operators on an algebra and on a tensor product of two algebras.
 *
 * Constructors validate eagerly (Hermitian, PSD, unit trace, block support);
 * `unchecked` skips validation for intermediates inside algorithms.
 */
#pragma once

#include "condchoi/algebra.hpp"
#include "condchoi/linalg.hpp"
#include "condchoi/matrix.hpp"

namespace condchoi {

struct StateTolerances {
    double hermitian = 1e-10;
    double positivity = 1e-10;
    double trace = 1e-10;
    double support = 1e-12;
};

/// Measured distances from each state invariant.
struct StateCheck {
    double hermiticity = 0.0;
    /// max(0, -lambda_min)
    double negativity = 0.0;
    double trace_deviation = 0.0;
    double support_deviation = 0.0;
};

StateCheck check_state_matrix(const ComplexMatrix &m, const AlgebraShape &shape);
StateCheck check_state_matrix(const ComplexMatrix &m, const AlgebraShape &a,
                              const AlgebraShape &b);

/// Throws InvariantViolation naming the first failing invariant:
/// "hermitian", "positive", "trace" or "block_support".
void enforce(const StateCheck &check, const StateTolerances &tol);

class State {
  public:
    State(AlgebraShape shape, ComplexMatrix matrix,
          const StateTolerances &tol = {});

    static State unchecked(AlgebraShape shape, ComplexMatrix matrix);
    static State maximally_mixed(const AlgebraShape &shape);
    static State from_element(const AlgebraElement &e);

    [[nodiscard]] const AlgebraShape &shape() const noexcept { return shape_; }
    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return matrix_; }
    [[nodiscard]] std::size_t dim() const noexcept { return shape_.total_dim(); }

  private:
    struct NoCheck {};
    State(AlgebraShape shape, ComplexMatrix matrix, NoCheck);

    AlgebraShape shape_;
    ComplexMatrix matrix_;
};

class JointState {
  public:
    JointState(AlgebraShape a, AlgebraShape b, ComplexMatrix matrix,
               const StateTolerances &tol = {});

    static JointState unchecked(AlgebraShape a, AlgebraShape b,
                                ComplexMatrix matrix);
    static JointState product(const State &a, const State &b);

    [[nodiscard]] const AlgebraShape &shape_a() const noexcept { return a_; }
    [[nodiscard]] const AlgebraShape &shape_b() const noexcept { return b_; }
    [[nodiscard]] const AlgebraShape &shape(Side s) const noexcept {
        return s == Side::A ? a_ : b_;
    }
    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return matrix_; }

  private:
    struct NoCheck {};
    JointState(AlgebraShape a, AlgebraShape b, ComplexMatrix matrix, NoCheck);

    AlgebraShape a_;
    AlgebraShape b_;
    ComplexMatrix matrix_;
};

/// Partial trace over the discarded side.
State reduce(const JointState &j, Side keep);

/// Entry-wise transpose in the embedding basis.
State transpose_in_basis(const State &s);

/// Off-diagonal entries all within tol (the state is diagonal in the
/// embedding basis, which is always the case on a classical shape).
bool is_classical(const State &s, double tol = 1e-12);

} // namespace condchoi
