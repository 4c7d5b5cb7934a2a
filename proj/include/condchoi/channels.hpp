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
 * Trace-preserving completely positive maps in Kraus form and the
 * channel <-> conditional-state isomorphism.
 *
 * The isomorphism uses the standard embedding basis {|j>}. For an input
 * algebra with several blocks the maximally entangled operator is replaced
 * by its projection (I (x) P)(|Phi+><Phi+|), i.e. only |jj><kk| with j and k
 * in the same block survive.
 */
#pragma once

#include "condchoi/algebra.hpp"
#include "condchoi/conditional.hpp"
#include "condchoi/matrix.hpp"
#include "condchoi/states.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace condchoi {

inline constexpr double kChannelTol = 1e-9;
/// Relative cutoff on Choi eigenvalues when extracting Kraus operators.
inline constexpr double kKrausCutoff = 1e-10;

class Channel {
  public:
    /// Validates dimensions and sum K^dagger K = I within tol.
    Channel(AlgebraShape in, AlgebraShape out, std::vector<ComplexMatrix> kraus,
            double tol = kChannelTol);

    /// A channel that is only trace preserving on the range of
    /// `input_support` (sum K^dagger K = input_support).
    static Channel on_support(AlgebraShape in, AlgebraShape out,
                              std::vector<ComplexMatrix> kraus,
                              ComplexMatrix input_support,
                              double tol = kChannelTol);

    [[nodiscard]] const AlgebraShape &shape_in() const noexcept { return in_; }
    [[nodiscard]] const AlgebraShape &shape_out() const noexcept { return out_; }
    [[nodiscard]] const std::vector<ComplexMatrix> &kraus() const noexcept {
        return kraus_;
    }
    [[nodiscard]] bool support_restricted() const noexcept {
        return support_.has_value();
    }
    /// Identity unless support_restricted().
    [[nodiscard]] ComplexMatrix input_support() const;

  private:
    struct SupportTag {};
    Channel(AlgebraShape in, AlgebraShape out, std::vector<ComplexMatrix> kraus,
            ComplexMatrix input_support, double tol, SupportTag);

    AlgebraShape in_;
    AlgebraShape out_;
    std::vector<ComplexMatrix> kraus_;
    std::optional<ComplexMatrix> support_;
};

/// sum K x K^dagger for any operator x on the input space.
ComplexMatrix apply_operator(const Channel &c, const ComplexMatrix &x);

/// ShapeMismatch unless s lives on c.shape_in().
State apply(const Channel &c, const State &s);

/// Unnormalized maximally entangled conditional on shape (x) shape (projected
/// onto the block-diagonal algebra for reducible shapes); trace = total dim.
ConditionalState max_ent_conditional(const AlgebraShape &shape);

/// (E (x) id)(rho~+) stored on in (x) out.
ConditionalState choi_conditional(const Channel &c);

/// Choi-form matrix sum_{j~k} |j><k| (x) map(|j><k|) of any linear map; j~k
/// ranges over index pairs in the same input block.
ComplexMatrix choi_of_map(const AlgebraShape &in, std::size_t out_dim,
                          const std::function<ComplexMatrix(const ComplexMatrix &)> &map);

/// Recover the channel from a conditional state via eigendecomposition of the
/// Choi form. Conditionals whose conditioning projector is not the identity
/// give a support-restricted channel. NotTracePreserving when that projector
/// is not a projector.
Channel channel_from_conditional(const ConditionalState &cond);

/// Direct evaluation of
/// Tr_{A A'}[(rho~+_{A'|A} (x) I_B)(sigma_A (x) rho_{B|A'})]
/// on the three-party space A (x) A' (x) B.
ComplexMatrix apply_via_conditional(const ConditionalState &cond,
                                    const ComplexMatrix &sigma);

struct ChannelReport {
    /// max |sum K^dagger K - I| (or |Tr_out Choi - I| for bare linear maps)
    double tp_deviation = 0.0;
    double choi_min_eigenvalue = 0.0;
    /// Largest off-block output entry over all input matrix units.
    double support_deviation = 0.0;
    bool trace_preserving = false;
    bool completely_positive = false;
    bool block_supported = false;

    [[nodiscard]] bool ok() const noexcept {
        return trace_preserving && completely_positive && block_supported;
    }
};

ChannelReport validate_channel(const Channel &c, double tol = kChannelTol);

/// Same checks for a bare linear map given as a function, e.g. transpose.
ChannelReport validate_linear_map(
    const AlgebraShape &in, const AlgebraShape &out,
    const std::function<ComplexMatrix(const ComplexMatrix &)> &map,
    double tol = kChannelTol);

/// Minimal Kraus set from the Choi eigendecomposition.
std::vector<ComplexMatrix> canonical_kraus(const Channel &c);

/// Choi rank 1: one eigenvalue within tol of the trace, the rest within tol
/// of zero.
bool is_isometry(const Channel &c, double tol = kChannelTol);

/// Isometry between equal irreducible shapes.
bool is_unitary(const Channel &c, double tol = kChannelTol);

Channel identity_channel(const AlgebraShape &shape);
/// rho -> Tr(rho) I/d on B(C^d).
Channel depolarizing_channel(std::size_t d);
Channel unitary_channel(const ComplexMatrix &u);
/// Classical channel on B(C)^{+n} -> B(C)^{+m} from a row-stochastic matrix,
/// rows indexed by input, columns by output: rows[i][k] = P(k | i).
Channel stochastic_channel(const std::vector<std::vector<double>> &rows);

} // namespace condchoi
