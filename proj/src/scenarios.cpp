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

#include "condchoi/scenarios.hpp"

#include "condchoi/conditional.hpp"
#include "condchoi/error.hpp"
#include "condchoi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace condchoi {
namespace {

constexpr double kBasisTol = 1e-9;
constexpr double kGroupTol = 1e-12;

bool is_identity_channel(const Channel &c) {
    if (!(c.shape_in() == c.shape_out())) {
        return false;
    }
    return max_abs_diff(choi_conditional(c).matrix(),
                        max_ent_conditional(c.shape_in()).matrix()) <= kChannelTol;
}

ComplexMatrix shift_clock(std::size_t d, std::size_t a, std::size_t b) {
    // X^a Z^b with X|j> = |j+1>, Z|j> = w^j |j>.
    ComplexMatrix v(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(b * j) /
                             static_cast<double>(d);
        v((j + a) % d, j) = std::polar(1.0, angle);
    }
    return v;
}

struct Branches {
    std::vector<double> probabilities;
    std::vector<std::optional<State>> bob;
};

// Alice measures A A' of sigma (x) rho_{A'B}; returns outcome probabilities
// and Bob's normalized conditional states.
Branches run_measurement(const Channel &c, const State &input,
                         std::span<const ComplexMatrix> effects) {
    const std::size_t d = c.shape_in().total_dim();
    const std::size_t db = c.shape_out().total_dim();
    const ComplexMatrix resource =
        choi_conditional(c).matrix() * (1.0 / static_cast<double>(d));
    const ComplexMatrix total = kron(input.matrix(), resource);
    const ComplexMatrix id_b = ComplexMatrix::identity(db);

    Branches out;
    for (const auto &effect : effects) {
        const ComplexMatrix weighted = kron(effect, id_b) * total;
        const double p = weighted.trace().real();
        out.probabilities.push_back(p);
        if (p <= kZeroProbability) {
            out.bob.emplace_back(std::nullopt);
            continue;
        }
        ComplexMatrix bob = partial_trace(weighted, d * d, db, Side::B) * (1.0 / p);
        bob = (bob + bob.adjoint()) * 0.5;
        out.bob.emplace_back(State(c.shape_out(), std::move(bob)));
    }
    return out;
}

void require_input(const Channel &c, const State &input) {
    if (!(input.shape() == c.shape_in())) {
        throw Error(ErrorKind::ShapeMismatch,
                    "input on " + to_string(input.shape()) + ", channel expects " +
                        to_string(c.shape_in()));
    }
}

std::optional<State> corrected(const std::optional<State> &bob,
                               const ComplexMatrix &fix) {
    if (!bob) {
        return std::nullopt;
    }
    return State(bob->shape(), sandwich(fix, bob->matrix()));
}

} // namespace

TheoremReport verify_theorem(const JointState &j, const Povm &n, const Povm &m) {
    if (!(n.shape() == j.shape_a()) || !(m.shape() == j.shape_b())) {
        throw Error(ErrorKind::ShapeMismatch,
                    "POVMs on " + to_string(n.shape()) + " and " +
                        to_string(m.shape()) + " for joint state on " +
                        to_string(j.shape_a()) + " (x) " + to_string(j.shape_b()));
    }
    TheoremReport r;
    r.lhs.assign(n.size(), std::vector<double>(m.size(), 0.0));
    r.rhs.assign(n.size(), std::vector<double>(m.size(), 0.0));

    for (std::size_t a = 0; a < n.size(); ++a) {
        for (std::size_t b = 0; b < m.size(); ++b) {
            r.lhs[a][b] = trace_product(kron(n[a], m[b]), j.matrix()).real();
        }
    }

    const ConditionalState cond = conditional_from_joint(j, Side::A);
    const Channel channel = channel_from_conditional(cond);
    r.support_restricted = channel.support_restricted();
    const State rho_t = transpose_in_basis(reduce(j, Side::A));
    const ComplexMatrix root = mat_sqrt(rho_t.matrix());
    for (std::size_t a = 0; a < n.size(); ++a) {
        const ComplexMatrix prepared = root * n[a].transpose() * root;
        const ComplexMatrix evolved = apply_operator(channel, prepared);
        for (std::size_t b = 0; b < m.size(); ++b) {
            r.rhs[a][b] = trace_product(m[b], evolved).real();
            r.max_deviation =
                std::max(r.max_deviation, std::abs(r.lhs[a][b] - r.rhs[a][b]));
        }
    }
    return r;
}

std::vector<ComplexMatrix> bell_basis(std::size_t d) {
    std::vector<ComplexMatrix> basis;
    basis.reserve(d * d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            const ComplexMatrix v = shift_clock(d, a, b);
            std::vector<cplx> vec(d * d);
            // (I (x) V) sum_j |j>|j> = sum_j |j> (x) V|j>
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t k = 0; k < d; ++k) {
                    vec[j * d + k] = v(k, j) * norm;
                }
            }
            basis.push_back(ComplexMatrix::outer(vec));
        }
    }
    return basis;
}

std::vector<ComplexMatrix> bell_corrections(std::size_t d) {
    std::vector<ComplexMatrix> fixes;
    fixes.reserve(d * d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            fixes.push_back(shift_clock(d, a, b).transpose());
        }
    }
    return fixes;
}

TeleportReport teleport(const Channel &c, const State &input,
                        std::span<const ComplexMatrix> measurement_basis) {
    if (!c.shape_in().is_irreducible()) {
        throw Error(ErrorKind::ShapeMismatch,
                    "teleport needs an irreducible input algebra, got " +
                        to_string(c.shape_in()));
    }
    require_input(c, input);
    const std::size_t d = c.shape_in().total_dim();
    const std::size_t n = d * d;
    if (measurement_basis.empty()) {
        throw Error(ErrorKind::BasisNotPOVM, "empty measurement basis");
    }
    ComplexMatrix total(n, n);
    for (const auto &e : measurement_basis) {
        if (!e.is_square() || e.rows() != n) {
            throw Error(ErrorKind::BasisNotPOVM, "effect does not act on A (x) A'");
        }
        if (hermiticity_deviation(e) > kBasisTol || min_eigenvalue(e, 1.0) < -kBasisTol) {
            throw Error(ErrorKind::BasisNotPOVM, "effect is not positive");
        }
        total += e;
    }
    const double sum_dev = max_abs_diff(total, ComplexMatrix::identity(n));
    if (sum_dev > kBasisTol) {
        throw Error(ErrorKind::BasisNotPOVM,
                    "effects do not sum to the identity (" + std::to_string(sum_dev) + ")");
    }
    const ComplexMatrix plus = bell_basis(d).front();
    const auto hit = std::find_if(
        measurement_basis.begin(), measurement_basis.end(),
        [&plus](const ComplexMatrix &e) { return max_abs_diff(e, plus) <= kBasisTol; });
    if (hit == measurement_basis.end()) {
        throw Error(ErrorKind::BasisNotPOVM,
                    "basis lacks the maximally entangled effect");
    }
    const auto success = static_cast<std::size_t>(hit - measurement_basis.begin());

    Branches br = run_measurement(c, input, measurement_basis);
    TeleportReport r{.success_probability = br.probabilities[success],
                     .outcome_probabilities = br.probabilities,
                     .success_outcome = success,
                     .bob_state_on_success = *br.bob[success],
                     .grouping_used = false,
                     .branch_states = std::move(br.bob),
                     .corrected_states = {},
                     .ungrouped_probabilities = {}};
    r.corrected_states.resize(r.branch_states.size());
    return r;
}

TeleportReport teleport(const Channel &c, const State &input) {
    if (!c.shape_in().is_irreducible()) {
        throw Error(ErrorKind::ShapeMismatch,
                    "teleport needs an irreducible input algebra, got " +
                        to_string(c.shape_in()));
    }
    const std::size_t d = c.shape_in().total_dim();
    const std::vector<ComplexMatrix> basis = bell_basis(d);
    TeleportReport r = teleport(c, input, basis);
    if (is_identity_channel(c)) {
        const auto fixes = bell_corrections(d);
        for (std::size_t i = 0; i < fixes.size(); ++i) {
            r.corrected_states[i] = corrected(r.branch_states[i], fixes[i]);
        }
    }
    return r;
}

TeleportReport teleport_general(const Channel &c, const State &input) {
    require_input(c, input);
    const AlgebraShape &shape = c.shape_in();
    const std::size_t d = shape.total_dim();
    const std::vector<ComplexMatrix> bell = bell_basis(d);
    const AlgebraShape full = AlgebraShape::irreducible(d);

    // Group Bell outcomes by their image under I (x) P_{A'}.
    std::vector<ComplexMatrix> images;
    std::vector<ComplexMatrix> grouped;
    for (const auto &e : bell) {
        const ComplexMatrix img = project_tensor(e, full, shape);
        bool merged = false;
        for (std::size_t g = 0; g < images.size(); ++g) {
            if (max_abs_diff(images[g], img) <= kGroupTol) {
                grouped[g] += e;
                merged = true;
                break;
            }
        }
        if (!merged) {
            images.push_back(img);
            grouped.push_back(e);
        }
    }

    Branches br = run_measurement(c, input, grouped);
    const Branches single = run_measurement(c, input, bell);
    TeleportReport r{.success_probability = br.probabilities.front(),
                     .outcome_probabilities = br.probabilities,
                     .success_outcome = 0,
                     .bob_state_on_success = *br.bob.front(),
                     .grouping_used = grouped.size() < bell.size(),
                     .branch_states = std::move(br.bob),
                     .corrected_states = {},
                     .ungrouped_probabilities = single.probabilities};
    r.corrected_states.resize(r.branch_states.size());
    return r;
}

TeleportReport teleport_classical(const Channel &c, const State &input) {
    const AlgebraShape bit = AlgebraShape::classical(2);
    if (!(c.shape_in() == bit)) {
        throw Error(ErrorKind::ShapeMismatch,
                    "classical teleportation needs a bit input algebra, got " +
                        to_string(c.shape_in()));
    }
    TeleportReport r = teleport_general(c, input);
    if (r.outcome_probabilities.size() != 2) {
        throw Error(ErrorKind::InvalidArgument,
                    "expected parity grouping of the Bell outcomes");
    }
    if (is_identity_channel(c)) {
        const ComplexMatrix flip{{0.0, 1.0}, {1.0, 0.0}};
        r.corrected_states[0] = r.branch_states[0];
        r.corrected_states[1] = corrected(r.branch_states[1], flip);
    }
    return r;
}

} // namespace condchoi
