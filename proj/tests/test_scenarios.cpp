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

#include "oracle.hpp"

#include "condchoi/conditional.hpp"
#include "condchoi/linalg.hpp"
#include "condchoi/random.hpp"
#include "condchoi/scenarios.hpp"

#include <catch_amalgamated.hpp>

using namespace condchoi;

namespace {

const AlgebraShape kQubit = AlgebraShape::irreducible(2);
const AlgebraShape kBit = AlgebraShape::classical(2);

ComplexMatrix diag(std::vector<double> d) { return ComplexMatrix::diagonal(std::span<const double>(d)); }

double lhs_oracle(const ComplexMatrix &rho, const ComplexMatrix &n, const ComplexMatrix &m) {
    return oracle::real_trace(oracle::matmul(oracle::kron(n, m), rho));
}

// Tr(M E(sqrt(rho^T) N^T sqrt(rho^T))) with E(s) = Tr_A[(s^T (x) I) C] and C the
// dense-oracle conditional.
double rhs_oracle(const ComplexMatrix &rho, std::size_t da, std::size_t db, const ComplexMatrix &n,
                  const ComplexMatrix &m) {
    const ComplexMatrix ra = oracle::ptrace(rho, da, db, true);
    const ComplexMatrix x = oracle::kron(oracle::inv_sqrt_psd(ra), ComplexMatrix::identity(db));
    const ComplexMatrix cond = oracle::matmul(oracle::matmul(x, rho), x);
    const ComplexMatrix rt = oracle::sqrt_psd(ra.transpose());
    const ComplexMatrix sigma = oracle::matmul(oracle::matmul(rt, n.transpose()), rt);
    const ComplexMatrix lifted = oracle::kron(sigma.transpose(), ComplexMatrix::identity(db));
    const ComplexMatrix out = oracle::ptrace(oracle::matmul(lifted, cond), da, db, false);
    return oracle::real_trace(oracle::matmul(m, out));
}

// Probability and normalized B state for effect `e` on A (x) A' with resource
// C/d on A' (x) B and input sigma on A.
std::pair<double, ComplexMatrix> teleport_oracle(const ComplexMatrix &choi, const ComplexMatrix &sigma,
                                                 const ComplexMatrix &e, std::size_t d, std::size_t db) {
    const ComplexMatrix joint = oracle::kron(sigma, choi * cplx(1.0 / d));
    const ComplexMatrix lifted = oracle::kron(e, ComplexMatrix::identity(db));
    const ComplexMatrix b = oracle::ptrace(oracle::matmul(lifted, joint), d * d, db, false);
    const double p = oracle::real_trace(b);
    return {p, b * cplx(1.0 / p)};
}

ComplexMatrix bell_projector(std::size_t d) {
    ComplexMatrix phi(d * d, d * d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) phi(j * d + j, k * d + k) = 1.0 / static_cast<double>(d);
    return phi;
}

} // namespace

TEST_CASE("theorem on a product state with trivial measurements") {
    const State a(kQubit, diag({0.3, 0.7}));
    const State b(AlgebraShape({3}), diag({0.2, 0.3, 0.5}));
    const TheoremReport r =
        verify_theorem(JointState::product(a, b), Povm::trivial(kQubit), Povm::trivial(AlgebraShape({3})));
    CHECK(r.lhs[0][0] == Catch::Approx(1.0));
    CHECK(r.rhs[0][0] == Catch::Approx(1.0));
    CHECK(r.max_deviation < 1e-12);
}

TEST_CASE("theorem on the maximally entangled pair") {
    const JointState j(kQubit, kQubit, bell_projector(2));
    const TheoremReport r = verify_theorem(j, Povm::computational(kQubit), Povm::computational(kQubit));
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) CHECK(std::abs(r.lhs[a][b] - (a == b ? 0.5 : 0.0)) < 1e-12);
    CHECK(r.max_deviation < 1e-9);
}

TEST_CASE("theorem matches both dense oracles") {
    Rng rng(50);
    const std::vector<std::pair<AlgebraShape, AlgebraShape>> configs{
        {kQubit, kQubit}, {kQubit, AlgebraShape({3})}, {kBit, kQubit}, {AlgebraShape({2, 1}), kBit}};
    for (const auto &[a, b] : configs) {
        const std::size_t da = a.total_dim(), db = b.total_dim();
        for (int t = 0; t < 40; ++t) {
            const bool deficient = t % 4 == 0;
            const JointState j =
                random_joint_state(a, b, rng, deficient ? std::optional<std::size_t>(da - 1) : std::nullopt);
            const Povm n = random_povm(a, 1 + t % 5, rng);
            const Povm m = random_povm(b, 1 + (t / 5) % 5, rng);
            const TheoremReport r = verify_theorem(j, n, m);
            CHECK(r.support_restricted == deficient);
            CHECK(r.max_deviation < 1e-9);
            double total = 0.0;
            for (std::size_t x = 0; x < n.size(); ++x) {
                for (std::size_t y = 0; y < m.size(); ++y) {
                    CHECK(std::abs(r.lhs[x][y] - lhs_oracle(j.matrix(), n[x], m[y])) < 1e-12);
                    CHECK(std::abs(r.rhs[x][y] - rhs_oracle(j.matrix(), da, db, n[x], m[y])) < 1e-8);
                    total += r.rhs[x][y];
                }
            }
            CHECK(std::abs(total - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("theorem rejects mismatched shapes") {
    Rng rng(51);
    const JointState j = random_joint_state(kQubit, kQubit, rng);
    CHECK_THROWS_AS(verify_theorem(j, Povm::trivial(AlgebraShape({3})), Povm::trivial(kQubit)), Error);
}

TEST_CASE("Bell basis is an orthonormal projective measurement") {
    for (std::size_t d : {2u, 3u, 4u}) {
        const auto basis = bell_basis(d);
        REQUIRE(basis.size() == d * d);
        CHECK(max_abs_diff(basis[0], bell_projector(d)) < 1e-12);
        ComplexMatrix sum(d * d, d * d);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            sum += basis[i];
            CHECK(idempotence_deviation(basis[i]) < 1e-12);
            CHECK(basis[i].trace().real() == Catch::Approx(1.0));
        }
        CHECK(max_abs_diff(sum, ComplexMatrix::identity(d * d)) < 1e-12);
        CHECK(bell_corrections(d).size() == d * d);
    }
}

TEST_CASE("identity channel qubit teleportation") {
    const Channel id = identity_channel(kQubit);
    const State s(kQubit, ComplexMatrix{{0.7, {0.1, 0.2}}, {{0.1, -0.2}, 0.3}});
    const TeleportReport r = teleport(id, s);
    CHECK(r.success_probability == Catch::Approx(0.25).margin(1e-12));
    CHECK(max_abs_diff(r.bob_state_on_success.matrix(), s.matrix()) < 1e-12);
    CHECK_FALSE(r.grouping_used);
    for (const auto &p : r.outcome_probabilities) CHECK(p == Catch::Approx(0.25).margin(1e-12));
    for (const auto &c : r.corrected_states) {
        REQUIRE(c.has_value());
        CHECK(max_abs_diff(c->matrix(), s.matrix()) < 1e-12);
    }
}

TEST_CASE("unitary and depolarizing teleportation") {
    Rng rng(52);
    const Channel u = unitary_channel(random_unitary(3, rng));
    const State s = random_state(AlgebraShape({3}), rng);
    const TeleportReport r = teleport(u, s);
    CHECK(std::abs(r.success_probability - 1.0 / 9) < 1e-9);
    CHECK(max_abs_diff(r.bob_state_on_success.matrix(), apply(u, s).matrix()) < 1e-9);

    const TeleportReport dep = teleport(depolarizing_channel(2), random_state(kQubit, rng));
    CHECK(max_abs_diff(dep.bob_state_on_success.matrix(), diag({0.5, 0.5})) < 1e-9);
}

TEST_CASE("teleportation matches the dense oracle for every outcome") {
    Rng rng(53);
    for (std::size_t d : {2u, 3u, 4u}) {
        const AlgebraShape s = AlgebraShape::irreducible(d);
        for (int t = 0; t < 10; ++t) {
            const AlgebraShape out = t % 2 ? s : AlgebraShape({2, 1});
            const Channel c = random_channel(s, out, 2, rng);
            const State in = random_state(s, rng);
            const TeleportReport r = teleport(c, in);
            CHECK(std::abs(r.success_probability - 1.0 / static_cast<double>(d * d)) < 1e-9);
            const auto basis = bell_basis(d);
            const ComplexMatrix choi = oracle::choi(c);
            double total = 0.0;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const auto [p, b] = teleport_oracle(choi, in.matrix(), basis[k], d, out.total_dim());
                CHECK(std::abs(r.outcome_probabilities[k] - p) < 1e-12);
                REQUIRE(r.branch_states[k].has_value());
                CHECK(max_abs_diff(r.branch_states[k]->matrix(), b) < 1e-9);
                total += p;
            }
            CHECK(std::abs(total - 1.0) < 1e-9);
            CHECK(max_abs_diff(r.bob_state_on_success.matrix(), apply(c, in).matrix()) < 1e-9);
        }
    }
}

TEST_CASE("teleportation with a custom basis") {
    const auto bell = bell_basis(2);
    const std::vector<ComplexMatrix> coarse{bell[0], ComplexMatrix::identity(4) - bell[0]};
    const State s(kQubit, diag({0.2, 0.8}));
    const TeleportReport r = teleport(identity_channel(kQubit), s, coarse);
    CHECK(r.success_probability == Catch::Approx(0.25));
    CHECK(r.outcome_probabilities[1] == Catch::Approx(0.75));

    const std::vector<ComplexMatrix> broken{bell[0], bell[1]};
    try {
        teleport(identity_channel(kQubit), s, broken);
        FAIL("expected BasisNotPOVM");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::BasisNotPOVM);
    }
    const std::vector<ComplexMatrix> no_phi{bell[1] + bell[0], bell[2], bell[3]};
    CHECK_THROWS_AS(teleport(identity_channel(kQubit), s, no_phi), Error);
}

TEST_CASE("classical teleportation with parity grouping") {
    const Channel id = identity_channel(kBit);
    for (const auto &d : {std::vector<double>{1.0, 0.0}, std::vector<double>{0.0, 1.0},
                          std::vector<double>{0.5, 0.5}, std::vector<double>{0.25, 0.75}}) {
        const State s(kBit, diag(d));
        const TeleportReport r = teleport_classical(id, s);
        CHECK(r.grouping_used);
        CHECK(std::abs(r.success_probability - 0.5) < 1e-12);
        CHECK(max_abs_diff(r.bob_state_on_success.matrix(), s.matrix()) < 1e-12);
        REQUIRE(r.corrected_states.size() == 2);
        for (const auto &c : r.corrected_states) {
            REQUIRE(c.has_value());
            CHECK(max_abs_diff(c->matrix(), s.matrix()) < 1e-12);
        }
        REQUIRE(r.ungrouped_probabilities.size() == 4);
    }
}

TEST_CASE("binary symmetric channel success branch") {
    const Channel bsc = stochastic_channel({{0.9, 0.1}, {0.1, 0.9}});
    const TeleportReport r = teleport_classical(bsc, State(kBit, diag({1.0, 0.0})));
    CHECK(std::abs(r.success_probability - 0.5) < 1e-12);
    CHECK(max_abs_diff(r.bob_state_on_success.matrix(), diag({0.9, 0.1})) < 1e-12);
}

TEST_CASE("classical success probability is one half for random bit channels") {
    Rng rng(54);
    for (int t = 0; t < 100; ++t) {
        const Channel c = random_channel(kBit, t % 2 ? kBit : kQubit, 2, rng);
        const TeleportReport r = teleport_classical(c, random_state(kBit, rng));
        CHECK(std::abs(r.success_probability - 0.5) < 1e-12);
    }
}

TEST_CASE("classical teleportation requires the bit algebra") {
    CHECK_THROWS_AS(teleport_classical(identity_channel(kQubit), State(kQubit, diag({1.0, 0.0}))), Error);
}

TEST_CASE("general-shape teleportation reports normalized probabilities") {
    Rng rng(55);
    const AlgebraShape s({2, 1});
    for (int t = 0; t < 20; ++t) {
        const Channel c = random_channel(s, kQubit, 2, rng);
        const State in = random_state(s, rng);
        const TeleportReport r = teleport_general(c, in);
        double total = 0.0;
        for (double p : r.outcome_probabilities) total += p;
        CHECK(std::abs(total - 1.0) < 1e-9);
        CHECK(r.success_probability > 0.0);
        CHECK(max_abs_diff(r.bob_state_on_success.matrix(), apply(c, in).matrix()) < 1e-9);
    }
}
