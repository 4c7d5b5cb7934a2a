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
 * Spectral primitives, Kronecker products and partial traces.
 *
 * Tensor ordering convention (project-wide): in kron(a, b) the FIRST factor
 * is the slow (outer) index, so row index (i, k) of a (x) b maps to
 * i * rows(b) + k. Every composite operator in this library follows it.
 */
#pragma once

#include "condchoi/matrix.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace condchoi {

/// Relative eigenvalue cutoff for ranks, supports and generalized inverses.
inline constexpr double kRankTol = 1e-10;
/// Absolute floor under the relative cutoff; only matters for ~0 matrices.
inline constexpr double kRankFloor = 1e-14;
inline constexpr double kHermitianTol = 1e-10;

/// Which tensor factor an operation keeps, conditions on, etc.
enum class Side { A, B };

[[nodiscard]] constexpr Side other(Side s) noexcept {
    return s == Side::A ? Side::B : Side::A;
}

struct EigenSystem {
    /// Descending.
    std::vector<double> values;
    /// Unitary; column i belongs to values[i]. The first entry of each column
    /// that is not negligible is real and positive.
    ComplexMatrix vectors;

    /// V * diag(f(lambda)) * V^dagger
    [[nodiscard]] ComplexMatrix
    reconstruct(const std::function<double(double)> &f) const;
    [[nodiscard]] ComplexMatrix reconstruct() const;
};

/// Full spectral decomposition of a Hermitian matrix.
/// NotHermitian if max|m - m^dagger| > tol (the input is symmetrized
/// otherwise); NoConvergence if the solver fails.
EigenSystem herm_eig(const ComplexMatrix &m, double tol = kHermitianTol);

/// Eigenvalue threshold below which an eigenvalue counts as zero.
double rank_cutoff(const EigenSystem &es, double rank_tol = kRankTol);

/// Unique PSD square root. NotPositive if min eigenvalue < -tol.
ComplexMatrix mat_sqrt(const ComplexMatrix &p, double tol = kHermitianTol);

/// Generalized inverse square root: eigenvalues above the rank cutoff map to
/// lambda^{-1/2}, the rest to 0.
ComplexMatrix gen_inv_sqrt(const ComplexMatrix &p, double rank_tol = kRankTol);

/// Orthogonal projector onto the eigenvectors above the rank cutoff.
ComplexMatrix support_projector(const ComplexMatrix &p,
                                double rank_tol = kRankTol);

/// Number of eigenvalues above the rank cutoff.
std::size_t numerical_rank(const ComplexMatrix &p, double rank_tol = kRankTol);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix &m, double tol = kHermitianTol);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Trace out one factor of a (dim_left * dim_right)-square matrix and return
/// the `keep` factor. DimensionMismatch on size disagreement.
ComplexMatrix partial_trace(const ComplexMatrix &m, std::size_t dim_left,
                            std::size_t dim_right, Side keep);

/// Reorder a (x) b into b (x) a.
ComplexMatrix swap_factors(const ComplexMatrix &m, std::size_t dim_left,
                           std::size_t dim_right);

/// max |m^2 - m|
double idempotence_deviation(const ComplexMatrix &m);

} // namespace condchoi
