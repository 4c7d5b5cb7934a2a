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

#include "condchoi/cli/selftest.hpp"

#include "condchoi/channels.hpp"
#include "condchoi/conditional.hpp"
#include "condchoi/linalg.hpp"
#include "condchoi/povm.hpp"
#include "condchoi/random.hpp"
#include "condchoi/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace condchoi::cli {
namespace {

class Tally {
  public:
    Tally(double tol) : tol_(tol) {}

    void record(const std::string &name, double deviation, double threshold) {
        auto [it, fresh] = index_.try_emplace(name, checks_.size());
        if (fresh) {
            checks_.push_back({name, 0, 0.0, threshold});
        }
        auto &c = checks_[it->second];
        ++c.instances;
        if (!std::isfinite(deviation)) {
            deviation = std::numeric_limits<double>::infinity();
        }
        c.max_deviation = std::max(c.max_deviation, deviation);
    }
    void record(const std::string &name, double deviation) { record(name, deviation, tol_); }

    std::vector<SelftestCheck> take() { return std::move(checks_); }

  private:
    double tol_;
    std::vector<SelftestCheck> checks_;
    std::map<std::string, std::size_t> index_;
};

double max_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double d = a.size() == b.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

void isomorphism(Tally &t, Rng &rng) {
    static const std::vector<AlgebraShape> ins{AlgebraShape({2}), AlgebraShape({3}),
                                               AlgebraShape({2, 1}), AlgebraShape({1, 1})};
    static const std::vector<AlgebraShape> outs{AlgebraShape({2}), AlgebraShape({3}),
                                                AlgebraShape({1, 1})};
    for (const auto &in : ins) {
        for (const auto &out : outs) {
            const Channel c = random_channel(in, out, 2, rng);
            const ConditionalState choi = choi_conditional(c);
            const Channel back = channel_from_conditional(choi);
            t.record("channel_valid", validate_channel(c).ok() ? 0.0 : 1.0);
            t.record("choi_trace_identity",
                     max_abs_diff(choi.conditioning_projector(),
                                  ComplexMatrix::identity(in.total_dim())));
            const State s = random_state(in, rng);
            const ComplexMatrix want = apply(c, s).matrix();
            t.record("isomorphism_roundtrip", max_abs_diff(apply(back, s).matrix(), want));
            t.record("isomorphism_direct",
                     max_abs_diff(apply_via_conditional(choi, s.matrix()), want));
        }
    }
}

void theorem(Tally &t, Rng &rng) {
    static const std::vector<std::pair<AlgebraShape, AlgebraShape>> configs{
        {AlgebraShape({2}), AlgebraShape({2})},
        {AlgebraShape({2}), AlgebraShape({3})},
        {AlgebraShape({1, 1}), AlgebraShape({2})},
        {AlgebraShape({2, 1}), AlgebraShape({1, 1})}};
    for (const auto &[a, b] : configs) {
        for (const bool deficient : {false, true}) {
            const std::size_t dim = a.total_dim();
            const auto rank = deficient ? std::optional<std::size_t>(dim - 1) : std::nullopt;
            const JointState j = random_joint_state(a, b, rng, rank);
            const std::size_t kn = 1 + rng.next_u64() % 5;
            const std::size_t km = 1 + rng.next_u64() % 5;
            const TheoremReport r =
                verify_theorem(j, random_povm(a, kn, rng), random_povm(b, km, rng));
            t.record(deficient ? "theorem_rank_deficient" : "theorem_full_rank",
                     r.max_deviation);
        }
    }
}

void conditionals(Tally &t, Rng &rng) {
    static const std::vector<std::pair<AlgebraShape, AlgebraShape>> configs{
        {AlgebraShape({2}), AlgebraShape({2})},
        {AlgebraShape({3}), AlgebraShape({2})},
        {AlgebraShape({2, 1}), AlgebraShape({1, 1})}};
    for (const auto &[a, b] : configs) {
        const std::size_t rank = 1 + rng.next_u64() % a.total_dim();
        const JointState j = random_joint_state(a, b, rng, rank);
        const ConditionalState c = conditional_from_joint(j, Side::A);
        const ComplexMatrix proj = c.conditioning_projector();
        const State ra = reduce(j, Side::A);
        t.record("conditional_projector", max_abs_diff(proj, support_projector(ra.matrix())));
        t.record("conditional_integer_rank",
                 std::abs(std::real(proj.trace()) - static_cast<double>(rank)));
        t.record("join_roundtrip", max_abs_diff(joint_from_conditional(ra, c).matrix(),
                                                j.matrix()));
    }
}

void classical_reduction(Tally &t, Rng &rng) {
    // Diagonal joint distribution: conditional is p(b|a) on the diagonal.
    const std::size_t na = 2 + rng.next_u64() % 2;
    const std::size_t nb = 2 + rng.next_u64() % 2;
    std::vector<double> p(na * nb);
    double total = 0.0;
    for (auto &x : p) {
        x = rng.uniform() + 0.05;
        total += x;
    }
    std::vector<double> diag(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        diag[i] = p[i] / total;
    }
    const JointState j(AlgebraShape::classical(na), AlgebraShape::classical(nb),
                       ComplexMatrix::diagonal(std::span<const double>(diag)));
    const ComplexMatrix c = conditional_from_joint(j, Side::A).matrix();
    double dev = 0.0;
    for (std::size_t a = 0; a < na; ++a) {
        double row = 0.0;
        for (std::size_t b = 0; b < nb; ++b) {
            row += diag[a * nb + b];
        }
        for (std::size_t b = 0; b < nb; ++b) {
            const std::size_t i = a * nb + b;
            dev = std::max(dev, std::abs(c(i, i) - diag[i] / row));
        }
    }
    t.record("classical_row_normalization", dev, 1e-12);
}

void teleportation(Tally &t, Rng &rng) {
    for (const std::size_t d : {2u, 3u, 4u}) {
        const AlgebraShape shape = AlgebraShape::irreducible(d);
        const Channel c = random_channel(shape, shape, 2, rng);
        const State s = random_state(shape, rng);
        const TeleportReport r = teleport(c, s);
        t.record("teleport_success_probability",
                 std::abs(r.success_probability - 1.0 / static_cast<double>(d * d)));
        t.record("teleport_bob_state",
                 max_abs_diff(r.bob_state_on_success.matrix(), apply(c, s).matrix()));
        double sum = 0.0;
        for (double p : r.outcome_probabilities) {
            sum += p;
        }
        t.record("teleport_probabilities_normalized", std::abs(sum - 1.0));
    }
    const AlgebraShape bit = AlgebraShape::classical(2);
    const double q = rng.uniform();
    const std::vector<double> diag{q, 1.0 - q};
    const State s(bit, ComplexMatrix::diagonal(std::span<const double>(diag)));
    const TeleportReport r = teleport_classical(identity_channel(bit), s);
    t.record("classical_success_half", std::abs(r.success_probability - 0.5), 1e-12);
    double pad = 0.0;
    for (const auto &branch : r.corrected_states) {
        pad = std::max(pad, branch ? max_abs_diff(branch->matrix(), s.matrix()) : 1.0);
    }
    t.record("one_time_pad", pad);
    const TeleportReport noisy =
        teleport_classical(random_channel(bit, bit, 2, rng), random_state(bit, rng));
    t.record("classical_success_half", std::abs(noisy.success_probability - 0.5), 1e-12);
}

void lemma(Tally &t, Rng &rng) {
    const AlgebraShape shape = rng.next_u64() % 2 ? AlgebraShape({3}) : AlgebraShape({2, 1});
    const State s = random_state(shape, rng);
    const Povm m = random_povm(shape, 2 + rng.next_u64() % 3, rng);
    const Ensemble e = prepare(m, s);
    t.record("ensemble_average", max_abs_diff(e.average(), s.matrix()));
    const Povm back = povm_from_ensemble(e, s);
    double dev = 0.0;
    for (std::size_t i = 0; i < e.outcomes.size(); ++i) {
        dev = std::max(dev, max_abs_diff(back.elements()[i], m.elements()[e.outcomes[i]]));
    }
    t.record("lemma_povm_roundtrip", dev);
    const Ensemble again = prepare(back, s);
    t.record("lemma_ensemble_roundtrip", max_diff(again.weights, e.weights));
}

void purity(Tally &t, Rng &rng) {
    const std::size_t d = 2 + rng.next_u64() % 2;
    const AlgebraShape shape = AlgebraShape::irreducible(d);
    const Channel u = unitary_channel(random_unitary(d, rng));
    const ConditionalState cu = choi_conditional(u);
    t.record("unitary_choi_rank_one", numerical_rank(cu.matrix()) == 1 ? 0.0 : 1.0);
    const Channel noisy = random_channel(shape, shape, 2, rng);
    const bool non_isometric = canonical_kraus(noisy).size() >= 2;
    t.record("noisy_choi_rank_two",
             non_isometric && numerical_rank(choi_conditional(noisy).matrix()) >= 2 ? 0.0
                                                                                    : 1.0);
}

void bayes(Tally &t, Rng &rng) {
    const AlgebraShape shape =
        rng.next_u64() % 2 ? AlgebraShape::irreducible(2) : AlgebraShape::classical(2);
    const JointState j = random_joint_state(shape, shape, rng);
    const ConditionalState b_given_a = conditional_from_joint(j, Side::A);
    const ConditionalState a_given_b = conditional_from_joint(j, Side::B);
    const ConditionalState inverted =
        bayes_invert(a_given_b, reduce(j, Side::A), reduce(j, Side::B));
    t.record("bayes_inversion", max_abs_diff(inverted.matrix(), b_given_a.matrix()));
}

} // namespace

bool SelftestReport::pass() const noexcept {
    return std::all_of(checks.begin(), checks.end(),
                       [](const SelftestCheck &c) { return c.pass(); });
}

double SelftestReport::max_deviation() const noexcept {
    double m = 0.0;
    for (const auto &c : checks) {
        m = std::max(m, c.max_deviation);
    }
    return m;
}

SelftestReport run_selftest(std::uint64_t seed, std::size_t trials, double tol) {
    Tally tally(tol);
    Rng root(seed);
    for (std::size_t i = 0; i < trials; ++i) {
        Rng rng = root.split();
        isomorphism(tally, rng);
        theorem(tally, rng);
        conditionals(tally, rng);
        classical_reduction(tally, rng);
        teleportation(tally, rng);
        lemma(tally, rng);
        purity(tally, rng);
        bayes(tally, rng);
    }
    return {seed, trials, tally.take()};
}

} // namespace condchoi::cli
