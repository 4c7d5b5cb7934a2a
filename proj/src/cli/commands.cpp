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

#include "condchoi/cli/commands.hpp"

#include "condchoi/channels.hpp"
#include "condchoi/cli/documents.hpp"
#include "condchoi/cli/selftest.hpp"
#include "condchoi/conditional.hpp"
#include "condchoi/povm.hpp"
#include "condchoi/random.hpp"
#include "condchoi/scenarios.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace condchoi::cli {
namespace {

class FileError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

Document load(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

AlgebraShape parse_shape(const std::string &text) {
    std::vector<std::size_t> dims;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(part, &used);
            if (used != part.size() || v <= 0) {
                throw std::invalid_argument(part);
            }
            dims.push_back(static_cast<std::size_t>(v));
        } catch (const std::logic_error &) {
            throw Error(ErrorKind::InvalidArgument, "bad shape '" + text + "'");
        }
    }
    if (dims.empty()) {
        throw Error(ErrorKind::InvalidArgument, "empty shape");
    }
    return AlgebraShape(std::move(dims));
}

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::SyntaxError:
        return kExitParse;
    case ErrorKind::InvalidArgument:
        return kExitUsage;
    case ErrorKind::NoConvergence:
        return kExitNumerical;
    default:
        return kExitInvariant;
    }
}

void emit(std::ostream &out, const Json &j) { out << j.dump(2) << "\n"; }

struct Options {
    double tol = 1e-9;
    std::string channel, conditional, joint, marginal, marginal_a, marginal_b;
    std::string povm, povm_a, povm_b, state, input, basis;
    std::string on = "A";
    std::string kind = "state";
    std::string shape = "2", shape_b = "2";
    std::uint64_t seed = 0;
    std::size_t trials = 10, env = 2, outcomes = 2, shots = 100, rank = 0;
    bool classical = false;
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Conditional density operators and the Choi isomorphism", "condchoi"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--tol", o.tol, "Pass/fail tolerance for reports")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::function<int()> action;
    auto add = [&](const char *name, const char *help, std::function<int()> f) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->callback([&action, f = std::move(f)] { action = f; });
        return sub;
    };

    auto *choi = add("choi", "Channel document -> conditional state", [&] {
        const Channel c = expect<Channel>(load(o.channel), DocumentKind::Channel);
        const ConditionalState cond = choi_conditional(c);
        emit(out, to_json(cond));
        err << "choi: " << to_string(c.shape_in()) << " -> " << to_string(c.shape_out())
            << ", rank " << cond.rank().rank << "\n";
        return kExitOk;
    });
    choi->add_option("--channel", o.channel, "Channel document")->required();

    auto *channel = add("channel", "Conditional state -> Kraus-form channel", [&] {
        const auto cond =
            expect<ConditionalState>(load(o.conditional), DocumentKind::Conditional);
        const Channel c = channel_from_conditional(cond);
        emit(out, to_json(c));
        err << "channel: " << c.kraus().size() << " Kraus operators"
            << (c.support_restricted() ? " (support restricted)" : "") << "\n";
        return kExitOk;
    });
    channel->add_option("--conditional", o.conditional, "Conditional document")->required();

    auto *condition = add("condition", "Joint state -> conditional state", [&] {
        const auto j = expect<JointState>(load(o.joint), DocumentKind::JointState);
        const ConditionalState c = conditional_from_joint(j, o.on == "A" ? Side::A : Side::B);
        emit(out, to_json(c));
        err << "condition on " << o.on << ": rank " << c.rank().rank << "\n";
        return kExitOk;
    });
    condition->add_option("--joint", o.joint, "Joint-state document")->required();
    condition->add_option("--on", o.on, "Conditioning system")
        ->check(CLI::IsMember({"A", "B"}))
        ->capture_default_str();

    auto *join = add("join", "Marginal and conditional -> joint state", [&] {
        const auto m = expect<State>(load(o.marginal), DocumentKind::State);
        const auto c =
            expect<ConditionalState>(load(o.conditional), DocumentKind::Conditional);
        emit(out, to_json(joint_from_conditional(m, c)));
        err << "join: ok\n";
        return kExitOk;
    });
    join->add_option("--marginal", o.marginal, "State document")->required();
    join->add_option("--conditional", o.conditional, "Conditional document")->required();

    auto *bayes = add("bayes", "Invert rho_{A|B} into rho_{B|A}", [&] {
        const auto c =
            expect<ConditionalState>(load(o.conditional), DocumentKind::Conditional);
        const auto a = expect<State>(load(o.marginal_a), DocumentKind::State);
        const auto b = expect<State>(load(o.marginal_b), DocumentKind::State);
        emit(out, to_json(bayes_invert(c, a, b)));
        err << "bayes: ok\n";
        return kExitOk;
    });
    bayes->add_option("--conditional", o.conditional, "rho_{A|B} document")->required();
    bayes->add_option("--marginal-a", o.marginal_a, "rho_A document")->required();
    bayes->add_option("--marginal-b", o.marginal_b, "rho_B document")->required();

    auto *theorem = add("verify-theorem", "Compare both sides of the joint-outcome identity", [&] {
        const auto j = expect<JointState>(load(o.joint), DocumentKind::JointState);
        const auto n = expect<Povm>(load(o.povm_a), DocumentKind::Povm);
        const auto m = expect<Povm>(load(o.povm_b), DocumentKind::Povm);
        const TheoremReport r = verify_theorem(j, n, m);
        Json doc = to_json(r);
        doc["tolerance"] = o.tol;
        doc["pass"] = r.max_deviation < o.tol;
        emit(out, doc);
        err << "verify-theorem: maxDeviation " << std::setprecision(3) << r.max_deviation
            << (r.max_deviation < o.tol ? " (pass)" : " (FAIL)") << "\n";
        return r.max_deviation < o.tol ? kExitOk : kExitInvariant;
    });
    theorem->add_option("--joint", o.joint, "Joint-state document")->required();
    theorem->add_option("--povm-a", o.povm_a, "POVM on A")->required();
    theorem->add_option("--povm-b", o.povm_b, "POVM on B")->required();

    auto *tele = add("teleport", "Noisy-gate teleportation", [&] {
        const auto c = expect<Channel>(load(o.channel), DocumentKind::Channel);
        const auto s = expect<State>(load(o.input), DocumentKind::State);
        TeleportReport r = [&] {
            if (o.classical) {
                return teleport_classical(c, s);
            }
            if (!o.basis.empty()) {
                const auto p = expect<Povm>(load(o.basis), DocumentKind::Povm);
                return teleport(c, s, p.elements());
            }
            if (c.shape_in().is_irreducible()) {
                return teleport(c, s);
            }
            return teleport_general(c, s);
        }();
        emit(out, to_json(r));
        err << "teleport: success probability " << std::setprecision(6)
            << r.success_probability << (r.grouping_used ? " (grouped)" : "") << "\n";
        return kExitOk;
    });
    tele->add_option("--channel", o.channel, "Channel document")->required();
    tele->add_option("--input", o.input, "Input state document")->required();
    tele->add_option("--basis", o.basis, "Measurement POVM on A (x) A'");
    tele->add_flag("--classical", o.classical, "Bit algebra with parity grouping");

    auto *prep = add("prepare", "POVM and state -> ensemble", [&] {
        const auto m = expect<Povm>(load(o.povm), DocumentKind::Povm);
        const auto s = expect<State>(load(o.state), DocumentKind::State);
        const Ensemble e = prepare(m, s);
        emit(out, to_json(e));
        err << "prepare: " << e.members.size() << " members\n";
        return kExitOk;
    });
    prep->add_option("--povm", o.povm, "POVM document")->required();
    prep->add_option("--state", o.state, "State document")->required();

    auto *meas = add("measure", "Outcome probabilities of a POVM", [&] {
        const auto m = expect<Povm>(load(o.povm), DocumentKind::Povm);
        const auto s = expect<State>(load(o.state), DocumentKind::State);
        emit(out, {{"kind", "measurement"}, {"probabilities", measure(m, s)}});
        err << "measure: " << m.elements().size() << " outcomes\n";
        return kExitOk;
    });
    meas->add_option("--povm", o.povm, "POVM document")->required();
    meas->add_option("--state", o.state, "State document")->required();

    auto *samp = add("sample", "Draw outcomes of a POVM", [&] {
        const auto m = expect<Povm>(load(o.povm), DocumentKind::Povm);
        const auto s = expect<State>(load(o.state), DocumentKind::State);
        Rng rng(o.seed);
        emit(out, {{"kind", "samples"},
                   {"seed", o.seed},
                   {"shots", o.shots},
                   {"counts", sample(m, s, rng, o.shots)},
                   {"probabilities", measure(m, s)}});
        err << "sample: " << o.shots << " shots\n";
        return kExitOk;
    });
    samp->add_option("--povm", o.povm, "POVM document")->required();
    samp->add_option("--state", o.state, "State document")->required();
    samp->add_option("--shots", o.shots, "Number of draws")->capture_default_str();
    samp->add_option("--seed", o.seed, "Generator seed")->capture_default_str();

    auto *self = add("selftest", "Invariant suite on random instances", [&] {
        const SelftestReport r = run_selftest(o.seed, o.trials, o.tol);
        Json checks = Json::array();
        for (const auto &c : r.checks) {
            checks.push_back({{"name", c.name},
                              {"instances", c.instances},
                              {"maxDeviation", c.max_deviation},
                              {"threshold", c.threshold},
                              {"pass", c.pass()}});
            err << (c.pass() ? "PASS " : "FAIL ") << std::left << std::setw(34) << c.name
                << " n=" << std::setw(6) << c.instances << " maxDeviation "
                << std::setprecision(3) << c.max_deviation << "\n";
        }
        emit(out, {{"kind", "selftest_report"},
                   {"seed", r.seed},
                   {"trials", r.trials},
                   {"tolerance", o.tol},
                   {"maxDeviation", r.max_deviation()},
                   {"pass", r.pass()},
                   {"checks", std::move(checks)}});
        return r.pass() ? kExitOk : kExitInvariant;
    });
    self->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
    self->add_option("--trials", o.trials, "Number of trials")->capture_default_str();

    auto *rnd = add("random", "Generate a random document", [&] {
        Rng rng(o.seed);
        const AlgebraShape a = parse_shape(o.shape);
        const auto rank = o.rank ? std::optional<std::size_t>(o.rank) : std::nullopt;
        if (o.kind == "state") {
            emit(out, to_json(random_state(a, rng, rank)));
        } else if (o.kind == "joint_state") {
            emit(out, to_json(random_joint_state(a, parse_shape(o.shape_b), rng, rank)));
        } else if (o.kind == "channel") {
            emit(out, to_json(random_channel(a, parse_shape(o.shape_b), o.env, rng)));
        } else if (o.kind == "povm") {
            emit(out, to_json(random_povm(a, o.outcomes, rng)));
        } else {
            emit(out, to_json(unitary_channel(random_unitary(a.total_dim(), rng))));
        }
        err << "random " << o.kind << " (seed " << o.seed << ")\n";
        return kExitOk;
    });
    rnd->add_option("--kind", o.kind, "Document kind")
        ->check(CLI::IsMember({"state", "joint_state", "channel", "povm", "unitary"}))
        ->capture_default_str();
    rnd->add_option("--shape", o.shape, "Block dimensions, comma separated")
        ->capture_default_str();
    rnd->add_option("--shape-b", o.shape_b, "Second shape (B, or channel output)")
        ->capture_default_str();
    rnd->add_option("--env", o.env, "Environment dimension for channels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    rnd->add_option("--outcomes", o.outcomes, "POVM outcomes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    rnd->add_option("--rank", o.rank, "Rank of the state, or of the A marginal");
    rnd->add_option("--seed", o.seed, "Generator seed")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        return action();
    } catch (const FileError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InvariantViolation &e) {
        err << "error: invariant '" << e.invariant() << "' violated, deviation "
            << std::setprecision(6) << e.deviation() << "\n";
        return kExitInvariant;
    } catch (const Error &e) {
        err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

} // namespace condchoi::cli
