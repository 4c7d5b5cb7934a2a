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

#include "condchoi/channels.hpp"
#include "condchoi/conditional.hpp"
#include "condchoi/linalg.hpp"
#include "condchoi/random.hpp"

#include <catch_amalgamated.hpp>

using namespace condchoi;

namespace {

const AlgebraShape kQubit = AlgebraShape::irreducible(2);
const AlgebraShape kBit = AlgebraShape::classical(2);

ComplexMatrix diag(std::vector<double> d) { return ComplexMatrix::diagonal(std::span<const double>(d)); }

const std::vector<AlgebraShape> &input_shapes() {
    static const std::vector<AlgebraShape> s{AlgebraShape({2}), AlgebraShape({3}),
                                             AlgebraShape({2, 1}), AlgebraShape({1, 1})};
    return s;
}
const std::vector<AlgebraShape> &output_shapes() {
    static const std::vector<AlgebraShape> s{AlgebraShape({2}), AlgebraShape({3}), AlgebraShape({1, 1})};
    return s;
}

} // namespace

TEST_CASE("apply on simple channels") {
    Rng rng(20);
    const State s = random_state(kQubit, rng);
    CHECK(max_abs_diff(apply(identity_channel(kQubit), s).matrix(), s.matrix()) < 1e-15);
    CHECK(max_abs_diff(apply(depolarizing_channel(2), s).matrix(), diag({0.5, 0.5})) < 1e-12);
    CHECK_THROWS_AS(apply(identity_channel(AlgebraShape({3})), s), Error);
    for (int t = 0; t < 50; ++t) {
        const Channel c = random_channel(AlgebraShape({2, 1}), AlgebraShape({3}), 3, rng);
        const State r = random_state(AlgebraShape({2, 1}), rng);
        const ComplexMatrix out = apply(c, r).matrix();
        CHECK(std::abs(out.trace().real() - 1.0) < 1e-10);
        CHECK(oracle::max_diff(out, oracle::apply_kraus(c.kraus(), r.matrix())) < 1e-12);
    }
}

TEST_CASE("maximally entangled conditional") {
    const ConditionalState q = max_ent_conditional(kQubit);
    CHECK(q.matrix().rows() == 4);
    CHECK(q.matrix().trace().real() == Catch::Approx(2.0));
    CHECK(numerical_rank(q.matrix()) == 1);
    CHECK(max_abs_diff(q.matrix(), choi_conditional(identity_channel(kQubit)).matrix()) < 1e-15);

    const ConditionalState b = max_ent_conditional(kBit);
    CHECK(max_abs_diff(b.matrix(), diag({1.0, 0.0, 0.0, 1.0})) < 1e-15);

    for (const auto &s : input_shapes()) {
        const ConditionalState m = max_ent_conditional(s);
        const std::size_t d = s.total_dim();
        CHECK(max_abs_diff(oracle::ptrace(m.matrix(), d, d, true), ComplexMatrix::identity(d)) < 1e-15);
    }
}

TEST_CASE("Choi conditional of simple channels") {
    const ConditionalState dep = choi_conditional(depolarizing_channel(2));
    CHECK(max_abs_diff(dep.matrix(), ComplexMatrix::identity(4) * cplx(0.5)) < 1e-12);
    CHECK(dep.matrix().trace().real() == Catch::Approx(2.0));

    Rng rng(21);
    for (std::size_t d : {2u, 3u}) {
        const ConditionalState u = choi_conditional(unitary_channel(random_unitary(d, rng)));
        CHECK(numerical_rank(u.matrix()) == 1);
    }
}

TEST_CASE("Choi conditional matches the definition oracle") {
    Rng rng(22);
    for (const auto &in : input_shapes()) {
        for (const auto &out : output_shapes()) {
            const Channel c = random_channel(in, out, 2, rng);
            const ConditionalState cond = choi_conditional(c);
            CHECK(oracle::max_diff(cond.matrix(), oracle::choi(c)) < 1e-12);
            CHECK(max_abs_diff(cond.conditioning_projector(),
                               ComplexMatrix::identity(in.total_dim())) < 1e-12);
        }
    }
}

TEST_CASE("isomorphism round trip on all shape pairs") {
    Rng rng(23);
    for (const auto &in : input_shapes()) {
        for (const auto &out : output_shapes()) {
            for (int t = 0; t < 20; ++t) {
                const Channel c = random_channel(in, out, 2 + t % 3, rng);
                const ConditionalState cond = choi_conditional(c);
                const Channel back = channel_from_conditional(cond);
                CHECK_FALSE(back.support_restricted());
                CHECK(max_abs_diff(choi_conditional(back).matrix(), cond.matrix()) < 1e-9);
                for (int k = 0; k < 3; ++k) {
                    const State s = random_state(in, rng);
                    const ComplexMatrix want = apply(c, s).matrix();
                    CHECK(max_abs_diff(apply(back, s).matrix(), want) < 1e-9);
                    CHECK(max_abs_diff(apply_via_conditional(cond, s.matrix()), want) < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("identity conditional recovers the identity channel") {
    Rng rng(24);
    const Channel c = channel_from_conditional(max_ent_conditional(kQubit));
    for (int t = 0; t < 10; ++t) {
        const State s = random_state(kQubit, rng);
        CHECK(max_abs_diff(apply(c, s).matrix(), s.matrix()) < 1e-9);
    }
    CHECK(is_unitary(c));
}

TEST_CASE("classical conditional is a stochastic matrix") {
    const ConditionalState cond(kBit, kBit, diag({0.9, 0.1, 0.2, 0.8}));
    const Channel c = channel_from_conditional(cond);
    const State zero(kBit, diag({1.0, 0.0}));
    CHECK(max_abs_diff(apply(c, zero).matrix(), diag({0.9, 0.1})) < 1e-12);

    Rng rng(25);
    for (int t = 0; t < 20; ++t) {
        std::vector<std::vector<double>> rows(3, std::vector<double>(2));
        for (auto &r : rows) {
            r[0] = rng.uniform();
            r[1] = 1.0 - r[0];
        }
        const Channel s = stochastic_channel(rows);
        const ConditionalState sc = choi_conditional(s);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 2; ++k)
                CHECK(std::abs(sc.matrix()(i * 2 + k, i * 2 + k).real() - rows[i][k]) < 1e-12);
        CHECK(block_support_deviation(sc.matrix(), AlgebraShape::classical(3), kBit) < 1e-12);
    }
}

TEST_CASE("Choi conditional with any full-rank marginal gives a valid joint state") {
    Rng rng(26);
    for (const auto &in : input_shapes()) {
        const ConditionalState cond = choi_conditional(random_channel(in, AlgebraShape({2}), 2, rng));
        const State m = random_state(in, rng);
        CHECK_NOTHROW(JointState(in, AlgebraShape({2}), joint_from_conditional(m, cond).matrix()));
    }
}

TEST_CASE("rank-deficient conditional yields a support-restricted channel") {
    Rng rng(27);
    const JointState j = random_joint_state(AlgebraShape({3}), kQubit, rng, 2);
    const ConditionalState cond = conditional_from_joint(j, Side::A);
    const Channel c = channel_from_conditional(cond);
    CHECK(c.support_restricted());
    const ComplexMatrix p = cond.conditioning_projector().transpose();
    CHECK(max_abs_diff(c.input_support(), p) < 1e-9);
    ComplexMatrix sum(3, 3);
    for (const auto &k : c.kraus()) sum += k.adjoint() * k;
    CHECK(max_abs_diff(sum, p) < 1e-9);
    CHECK(max_abs_diff(choi_conditional(c).matrix(), cond.matrix()) < 1e-9);
}

TEST_CASE("channel validation") {
    const ChannelReport id = validate_channel(identity_channel(kQubit));
    CHECK(id.ok());
    CHECK(id.tp_deviation == 0.0);
    CHECK(std::abs(id.choi_min_eigenvalue) < 1e-12);

    const ChannelReport transpose =
        validate_linear_map(kQubit, kQubit, [](const ComplexMatrix &x) { return x.transpose(); });
    CHECK(transpose.trace_preserving);
    CHECK_FALSE(transpose.completely_positive);
    CHECK(transpose.choi_min_eigenvalue == Catch::Approx(-1.0));

    const ChannelReport leaky = validate_linear_map(kQubit, kBit, [](const ComplexMatrix &x) { return x; });
    CHECK_FALSE(leaky.block_supported);

    CHECK_THROWS_AS(Channel(kQubit, kQubit, {ComplexMatrix{{1.0, 0.0}, {0.0, 0.5}}}), Error);
    try {
        Channel(kQubit, kQubit, {ComplexMatrix{{1.0, 0.0}, {0.0, 0.5}}});
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotTracePreserving);
    }
    const ComplexMatrix h = ComplexMatrix{{1.0, 1.0}, {1.0, -1.0}} * cplx(1.0 / std::sqrt(2.0));
    CHECK_THROWS_AS(Channel(kQubit, kBit, {h}), InvariantViolation);

    Rng rng(28);
    for (int t = 0; t < 1000; ++t) {
        const auto &in = input_shapes()[t % 4];
        const auto &out = output_shapes()[t % 3];
        CHECK(validate_channel(random_channel(in, out, 2 + t % 4, rng)).ok());
    }
}

TEST_CASE("purity and isometry") {
    const ComplexMatrix h = ComplexMatrix{{1.0, 1.0}, {1.0, -1.0}} * cplx(1.0 / std::sqrt(2.0));
    CHECK(is_unitary(unitary_channel(h)));
    CHECK(is_isometry(unitary_channel(h)));
    CHECK_FALSE(is_isometry(depolarizing_channel(2)));
    CHECK(numerical_rank(choi_conditional(depolarizing_channel(2)).matrix()) == 4);

    Rng rng(29);
    const ComplexMatrix v = random_isometry(4, 2, rng);
    const Channel iso(kQubit, AlgebraShape({4}), {v});
    CHECK(is_isometry(iso));
    CHECK_FALSE(is_unitary(iso));
    CHECK(numerical_rank(oracle::choi(iso)) == 1);

    for (int t = 0; t < 30; ++t) {
        const Channel noisy = random_channel(AlgebraShape({3}), AlgebraShape({3}), 2 + t % 2, rng);
        CHECK(canonical_kraus(noisy).size() >= 2);
        CHECK_FALSE(is_isometry(noisy));
        CHECK(numerical_rank(choi_conditional(noisy).matrix()) >= 2);
    }
}

TEST_CASE("canonical Kraus operators are orthogonal and reproduce the channel") {
    Rng rng(30);
    const Channel c = random_channel(AlgebraShape({3}), kQubit, 4, rng);
    const auto ks = canonical_kraus(c);
    for (std::size_t i = 0; i < ks.size(); ++i)
        for (std::size_t j = 0; j < ks.size(); ++j)
            if (i != j) CHECK(std::abs(trace_product(ks[i].adjoint(), ks[j])) < 1e-9);
    const State s = random_state(AlgebraShape({3}), rng);
    CHECK(oracle::max_diff(oracle::apply_kraus(ks, s.matrix()), apply(c, s).matrix()) < 1e-9);
}
