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
 * POVMs, the generalized Born rule, and POVM preparations: an M-preparation
 * of rho emits sqrt(rho) M_j sqrt(rho) / Tr(M_j rho) with probability
 * Tr(M_j rho), and every ensemble decomposition of rho arises this way.
 */
#pragma once

#include "condchoi/algebra.hpp"
#include "condchoi/matrix.hpp"
#include "condchoi/states.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace condchoi {

class Rng;

/// Outcomes with probability below this are dropped from preparations.
inline constexpr double kZeroProbability = 1e-12;

class Povm {
  public:
    /// Validates: elements PSD within 1e-10, block-supported, sum to I
    /// within 1e-9.
    Povm(AlgebraShape shape, std::vector<ComplexMatrix> elements);

    /// Projectors onto the embedding basis vectors.
    static Povm computational(const AlgebraShape &shape);
    static Povm trivial(const AlgebraShape &shape);

    [[nodiscard]] const AlgebraShape &shape() const noexcept { return shape_; }
    [[nodiscard]] const std::vector<ComplexMatrix> &elements() const noexcept {
        return elements_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    [[nodiscard]] const ComplexMatrix &operator[](std::size_t j) const {
        return elements_.at(j);
    }

    /// {M_j^T}
    [[nodiscard]] Povm transpose() const;

  private:
    AlgebraShape shape_;
    std::vector<ComplexMatrix> elements_;
};

struct Ensemble {
    std::vector<double> weights;
    std::vector<State> members;
    /// POVM outcome index each member came from (identity when built by hand).
    std::vector<std::size_t> outcomes;

    /// sum_j p_j rho_j
    [[nodiscard]] ComplexMatrix average() const;
};

/// Checks weights are a distribution within 1e-9 and members share a shape.
Ensemble make_ensemble(std::vector<double> weights, std::vector<State> members);

/// Tr(M_j s). ShapeMismatch when shapes differ.
std::vector<double> measure(const Povm &m, const State &s);

/// The M-preparation of s; zero-probability outcomes are dropped.
Ensemble prepare(const Povm &m, const State &s);

/// M_j = s^{-1/2} p_j rho_j s^{-1/2}, plus a completion element I - sum M_j
/// when s is rank-deficient. SupportViolation if a member leaks outside
/// supp(s); InvalidArgument if the ensemble does not average to s.
Povm povm_from_ensemble(const Ensemble &e, const State &s);

/// Outcome counts of n inverse-CDF draws from measure(m, s).
std::vector<std::uint64_t> sample(const Povm &m, const State &s, Rng &rng,
                                  std::uint64_t n);

} // namespace condchoi
