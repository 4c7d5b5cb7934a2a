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
 * Conditional density operators rho_{B|A} = (rho_A^{-1/2} (x) I) rho_AB
 * (rho_A^{-1/2} (x) I), their inverse, and the Bayes-rule analog.
 *
 * Storage convention: the conditioning system is always the first (slow)
 * kron factor. rho_{B|A} lives on A (x) B; rho_{A|B} lives on B (x) A.
 */
#pragma once

#include "condchoi/algebra.hpp"
#include "condchoi/linalg.hpp"
#include "condchoi/matrix.hpp"
#include "condchoi/states.hpp"

#include <cstddef>

namespace condchoi {

struct ConditionalTolerances {
    double positivity = 1e-10;
    double hermitian = 1e-10;
    double idempotence = 1e-9;
    double integer_trace = 1e-6;
    double support = 1e-12;
};

/// Tr of Tr_target(cond) rounded to an integer, plus how far it was off.
struct RankReport {
    std::size_t rank = 0;
    double deviation = 0.0;
};

struct ConditionalCheck {
    double hermiticity = 0.0;
    double negativity = 0.0;
    /// max |P^2 - P| for P = Tr_target(cond)
    double idempotence = 0.0;
    RankReport rank;
    double support_deviation = 0.0;
};

class ConditionalState {
  public:
    /// Validates: PSD, Tr over the conditioned factor is a projector with
    /// integer trace, block support on conditioning (x) conditioned.
    ConditionalState(AlgebraShape conditioning, AlgebraShape conditioned,
                     ComplexMatrix matrix, const ConditionalTolerances &tol = {});

    static ConditionalState unchecked(AlgebraShape conditioning,
                                      AlgebraShape conditioned,
                                      ComplexMatrix matrix);

    /// Shape of the system conditioned on (A in rho_{B|A}).
    [[nodiscard]] const AlgebraShape &conditioning_shape() const noexcept {
        return cond_;
    }
    /// Shape of the system whose state is described (B in rho_{B|A}).
    [[nodiscard]] const AlgebraShape &conditioned_shape() const noexcept {
        return target_;
    }
    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return matrix_; }

    /// Tr over the conditioned factor; the support projector of the marginal
    /// this conditional was built from.
    [[nodiscard]] ComplexMatrix conditioning_projector() const;
    [[nodiscard]] RankReport rank() const;

  private:
    struct NoCheck {};
    ConditionalState(AlgebraShape conditioning, AlgebraShape conditioned,
                     ComplexMatrix matrix, NoCheck);

    AlgebraShape cond_;
    AlgebraShape target_;
    ComplexMatrix matrix_;
};

ConditionalCheck check_conditional(const ConditionalState &c);

/// Round Tr(p) to the nearest integer and report the deviation.
RankReport integer_rank(const ComplexMatrix &projector);

/// rho_{B|A} (condition_on = A) or rho_{A|B} (condition_on = B) with the
/// generalized inverse of the conditioning marginal.
ConditionalState conditional_from_joint(const JointState &j, Side condition_on);

/// (rho_A^{1/2} (x) I) rho_{B|A} (rho_A^{1/2} (x) I), returned on
/// marginal (x) conditioned. SupportMismatch if the result's trace is off
/// from 1 by more than 1e-8.
JointState joint_from_conditional(const State &marginal,
                                  const ConditionalState &cond);

/// Given rho_{A|B} (stored on B (x) A) and both marginals, return rho_{B|A}
/// on A (x) B via (rho_A^{-1/2} (x) rho_B^{1/2}) rho_{A|B}
/// (rho_A^{-1/2} (x) rho_B^{1/2}). SupportMismatch on rank-deficient
/// rho_B.
ConditionalState bayes_invert(const ConditionalState &cond_a_given_b,
                              const State &marginal_a, const State &marginal_b);

} // namespace condchoi
