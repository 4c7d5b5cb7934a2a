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
 * Seeded random instances.
 *
 * Generator: std::mt19937_64 seeded with the 64-bit seed. Uniform doubles
 * are (x >> 11) * 2^-53; normals come from Box-Muller on two uniforms with
 * the second variate cached. Nothing depends on the standard library's
 * distribution objects, so a seed gives the same stream everywhere.
 */
#pragma once

#include "condchoi/algebra.hpp"
#include "condchoi/channels.hpp"
#include "condchoi/matrix.hpp"
#include "condchoi/povm.hpp"
#include "condchoi/states.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace condchoi {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1).
    double uniform();
    double normal();
    /// Real and imaginary parts standard normal.
    cplx complex_normal();
    /// Independent generator for a sub-task (e.g. one trial).
    Rng split();

  private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

/// rows x cols matrix with complex standard normal entries.
ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng &rng);

/// Columns orthonormalized (modified Gram-Schmidt) from a Gaussian matrix;
/// rows >= cols. R has positive real diagonal.
ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng &rng);

ComplexMatrix random_unitary(std::size_t dim, Rng &rng);

/// G G^dagger projected onto the algebra and renormalized. `rank` limits the
/// number of columns of G (per block, after projection the rank is at most
/// rank * num_blocks).
State random_state(const AlgebraShape &shape, Rng &rng,
                   std::optional<std::size_t> rank = std::nullopt);

/// Random joint state on a (x) b. With `marginal_rank`, the A marginal is
/// restricted to a random block-diagonal projector of that rank.
JointState random_joint_state(const AlgebraShape &a, const AlgebraShape &b,
                              Rng &rng,
                              std::optional<std::size_t> marginal_rank = std::nullopt);

/// Random isometry into out (x) environment, environment traced out, then
/// composed with the block projections on input and output.
/// InvalidArgument if dim(out) * env_dim < dim(in).
Channel random_channel(const AlgebraShape &in, const AlgebraShape &out,
                       std::size_t env_dim, Rng &rng);

/// M_j = S^{-1/2} A_j S^{-1/2} with A_j random PSD on the algebra.
Povm random_povm(const AlgebraShape &shape, std::size_t outcomes, Rng &rng);

/// Random rank-r orthogonal projector in the algebra (block-diagonal).
ComplexMatrix random_projector(const AlgebraShape &shape, std::size_t rank,
                               Rng &rng);

} // namespace condchoi
