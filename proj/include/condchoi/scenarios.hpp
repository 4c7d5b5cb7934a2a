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
 * Operational readings of the isomorphism.
 *
 * verify_theorem compares local measurements N (x) M on a joint state with a
 * prepare-and-measure run: an N^T-preparation of rho_A^T, evolution by the
 * channel isomorphic to rho_{B|A}, then an M-measurement.
 *
 * The teleport family runs noisy-gate teleportation with the resource
 * rho_{A'B} = rho_{B|A'} / d: Alice measures A A' and Bob's system carries
 * E(sigma) on the maximally entangled outcome.
 */
#pragma once

#include "condchoi/channels.hpp"
#include "condchoi/matrix.hpp"
#include "condchoi/povm.hpp"
#include "condchoi/states.hpp"

#include <optional>
#include <span>
#include <vector>

namespace condchoi {

using ProbabilityMatrix = std::vector<std::vector<double>>;

struct TheoremReport {
    /// lhs[j][k] = Tr(N_j (x) M_k rho_AB)
    ProbabilityMatrix lhs;
    /// rhs[j][k] = Tr(M_k E(sqrt(rho^T) N_j^T sqrt(rho^T)))
    ProbabilityMatrix rhs;
    double max_deviation = 0.0;
    /// rho_A was rank-deficient and the channel is only defined on its support.
    bool support_restricted = false;
};

/// ShapeMismatch if n is not on A or m is not on B.
TheoremReport verify_theorem(const JointState &j, const Povm &n, const Povm &m);

struct TeleportReport {
    double success_probability = 0.0;
    /// One entry per (possibly grouped) outcome of Alice's measurement.
    std::vector<double> outcome_probabilities;
    /// Index into outcome_probabilities of the success outcome.
    std::size_t success_outcome = 0;
    State bob_state_on_success;
    bool grouping_used = false;
    /// Bob's normalized state per outcome; empty for zero-probability ones.
    std::vector<std::optional<State>> branch_states;
    /// Bob's state after the outcome-dependent correction, where one exists.
    std::vector<std::optional<State>> corrected_states;
    /// Bell-basis probabilities before grouping (grouped runs only).
    std::vector<double> ungrouped_probabilities;
};

/// Generalized Bell basis projectors on C^d (x) C^d: for outcome
/// index a*d + b, the vector (I (x) X^a Z^b)|Phi+> / sqrt(d). Outcome 0 is
/// |Phi+><Phi+|.
std::vector<ComplexMatrix> bell_basis(std::size_t d);

/// Bob's correction for outcome a*d + b when the channel is the identity:
/// (X^a Z^b)^T.
std::vector<ComplexMatrix> bell_corrections(std::size_t d);

/// Irreducible input algebra only (ShapeMismatch otherwise). The basis must
/// be a POVM on A (x) A' containing the normalized maximally entangled
/// projector (BasisNotPOVM otherwise).
TeleportReport teleport(const Channel &c, const State &input,
                        std::span<const ComplexMatrix> measurement_basis);

/// teleport() with bell_basis(d); corrections are filled in for the
/// identity channel.
TeleportReport teleport(const Channel &c, const State &input);

/// Any input algebra. Bell outcomes whose images under I (x) P_{A'} coincide
/// are grouped; the success group is the one containing |Phi+>.
TeleportReport teleport_general(const Channel &c, const State &input);

/// Classical bit algebra B(C) + B(C) only: parity-even (Phi+/-) is success,
/// parity-odd (Psi+/-) is failure, and for the identity channel Bob's bit
/// flip on failure recovers the input (one-time pad).
TeleportReport teleport_classical(const Channel &c, const State &input);

} // namespace condchoi
