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
#include "condchoi/cli/documents.hpp"
#include "condchoi/cli/selftest.hpp"
#include "condchoi/random.hpp"

#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

using namespace condchoi;
using namespace condchoi::cli;

namespace {

std::string fixture(const std::string &name) { return std::string(CONDCHOI_FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

Json output_json(const Result &r) { return Json::parse(r.out); }

} // namespace

TEST_CASE("minimal maximally mixed state parses") {
    const Document d = parse_document(slurp(fixture("maximally_mixed_qubit.json")));
    REQUIRE(d.kind() == DocumentKind::State);
    const auto &s = std::get<State>(d.value);
    CHECK(s.matrix() == ComplexMatrix::identity(2) * cplx(0.5));
}

TEST_CASE("trace-deficient state reports the trace invariant") {
    try {
        parse_document(slurp(fixture("trace_deficient_state.json")));
        FAIL("expected InvariantViolation");
    } catch (const InvariantViolation &e) {
        CHECK(e.invariant() == "trace");
        CHECK(e.deviation() == Catch::Approx(0.1));
    }
}

TEST_CASE("malformed JSON reports line and column") {
    try {
        parse_document(slurp(fixture("malformed.json")));
        FAIL("expected SyntaxError");
    } catch (const SyntaxError &e) {
        CHECK(e.kind() == ErrorKind::SyntaxError);
        CHECK(e.line() == 4);
        CHECK(e.column() >= 3);
    }
    try {
        parse_json("{\"a\": 1,\n\n   }");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError &e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 4);
    }
}

TEST_CASE("schema errors are syntax errors") {
    for (const char *text : {R"({"shape":[2]})", R"({"kind":"nope"})", R"({"kind":"state","shape":[2]})",
                             R"({"kind":"state","shape":[0],"matrix":[[1]]})",
                             R"({"kind":"state","shape":[2],"matrix":[[1,0],[0]]})",
                             R"({"kind":"state","shape":[1],"matrix":[[[1,0,0]]]})"}) {
        INFO(text);
        try {
            parse_document(text);
            FAIL("expected an error");
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::SyntaxError);
        }
    }
}

TEST_CASE("round trip is bit exact on a generated corpus") {
    Rng rng(60);
    std::vector<Document> corpus;
    const std::vector<AlgebraShape> shapes{AlgebraShape({2}), AlgebraShape({3}), AlgebraShape({2, 1}),
                                           AlgebraShape({1, 1})};
    for (int t = 0; t < 25; ++t) {
        const auto &a = shapes[t % 4];
        const auto &b = shapes[(t + 1) % 4];
        corpus.push_back({random_state(a, rng)});
        const JointState j = random_joint_state(a, b, rng, t % 3 == 0 ? std::optional<std::size_t>(1) : std::nullopt);
        corpus.push_back({j});
        const ConditionalState c = conditional_from_joint(j, t % 2 ? Side::A : Side::B);
        corpus.push_back({c});
        corpus.push_back({channel_from_conditional(c)});
        corpus.push_back({random_channel(a, b, 2, rng)});
        const Povm m = random_povm(a, 1 + t % 4, rng);
        corpus.push_back({m});
        corpus.push_back({prepare(m, random_state(a, rng))});
    }
    for (const auto &d : corpus) {
        const std::string text = serialize(d);
        const Document back = parse_document(text);
        CHECK(back.kind() == d.kind());
        CHECK(serialize(back) == text);
        CHECK(to_json(back) == to_json(d));
    }
}

TEST_CASE("document kinds are checked by commands") {
    const Result r = invoke({"choi", "--channel", fixture("qubit_input.json")});
    CHECK(r.code == kExitParse);
}

TEST_CASE("identity channel teleportation reports one quarter") {
    const Result r = invoke({"teleport", "--channel", fixture("identity_qubit_channel.json"), "--input",
                             fixture("qubit_input.json")});
    REQUIRE(r.code == kExitOk);
    const Json j = output_json(r);
    CHECK(j["kind"] == "teleport_report");
    CHECK(j["successProbability"].get<double>() == Catch::Approx(0.25).margin(1e-12));
    CHECK(j["probabilities"].size() == 4);
    const ComplexMatrix bob = matrix_from_json(j["bobStateOnSuccess"]["matrix"]);
    const auto in = std::get<State>(parse_document(slurp(fixture("qubit_input.json"))).value);
    CHECK(max_abs_diff(bob, in.matrix()) < 1e-12);
    CHECK(r.err.find("0.25") != std::string::npos);
}

TEST_CASE("classical teleportation of the binary symmetric channel") {
    const Result r = invoke({"teleport", "--classical", "--channel", fixture("bsc_channel.json"), "--input",
                             fixture("bit_zero.json")});
    REQUIRE(r.code == kExitOk);
    const Json j = output_json(r);
    CHECK(j["groupingUsed"] == true);
    CHECK(j["successProbability"].get<double>() == Catch::Approx(0.5).margin(1e-12));
    const ComplexMatrix bob = matrix_from_json(j["bobStateOnSuccess"]["matrix"]);
    CHECK(std::abs(bob(0, 0) - 0.9) < 1e-12);
    CHECK(std::abs(bob(1, 1) - 0.1) < 1e-12);
}

TEST_CASE("verify-theorem on the golden fixture") {
    const Result r = invoke({"verify-theorem", "--joint", fixture("theorem_joint.json"), "--povm-a",
                             fixture("theorem_povm_a.json"), "--povm-b", fixture("theorem_povm_b.json")});
    REQUIRE(r.code == kExitOk);
    const Json j = output_json(r);
    CHECK(j["maxDeviation"].get<double>() < 1e-9);
    CHECK(j["pass"] == true);
    const Json golden = Json::parse(slurp(fixture("theorem_report.json")));
    for (const char *side : {"lhs", "rhs"}) {
        const auto got = j[side].get<std::vector<std::vector<double>>>();
        const auto want = golden[side].get<std::vector<std::vector<double>>>();
        REQUIRE(got.size() == want.size());
        for (std::size_t a = 0; a < got.size(); ++a)
            for (std::size_t b = 0; b < got[a].size(); ++b) CHECK(std::abs(got[a][b] - want[a][b]) < 1e-12);
    }
    CHECK(r.err.find("maxDeviation") != std::string::npos);
}

TEST_CASE("choi and channel commands round trip") {
    const std::string dir = std::string(CONDCHOI_BINARY_DIR);
    const Result c = invoke({"choi", "--channel", fixture("channel_21_to_3.json")});
    REQUIRE(c.code == kExitOk);
    const std::string path = dir + "/cli_choi.json";
    std::ofstream(path) << c.out;
    const Result back = invoke({"channel", "--conditional", path});
    REQUIRE(back.code == kExitOk);
    const auto original = std::get<Channel>(parse_document(slurp(fixture("channel_21_to_3.json"))).value);
    const auto rebuilt = std::get<Channel>(parse_document(back.out).value);
    Rng rng(61);
    for (int t = 0; t < 10; ++t) {
        const State s = random_state(original.shape_in(), rng);
        CHECK(max_abs_diff(apply(original, s).matrix(), apply(rebuilt, s).matrix()) < 1e-9);
    }
}

TEST_CASE("condition, join and bayes commands") {
    const std::string dir = std::string(CONDCHOI_BINARY_DIR);
    const auto j = std::get<JointState>(parse_document(slurp(fixture("theorem_joint.json"))).value);
    const Result ca = invoke({"condition", "--joint", fixture("theorem_joint.json"), "--on", "A"});
    const Result cb = invoke({"condition", "--joint", fixture("theorem_joint.json"), "--on", "B"});
    REQUIRE(ca.code == kExitOk);
    REQUIRE(cb.code == kExitOk);
    std::ofstream(dir + "/cli_ca.json") << ca.out;
    std::ofstream(dir + "/cli_cb.json") << cb.out;
    std::ofstream(dir + "/cli_ma.json") << serialize({reduce(j, Side::A)});
    std::ofstream(dir + "/cli_mb.json") << serialize({reduce(j, Side::B)});

    const Result joined = invoke({"join", "--marginal", dir + "/cli_ma.json", "--conditional", dir + "/cli_ca.json"});
    REQUIRE(joined.code == kExitOk);
    CHECK(max_abs_diff(std::get<JointState>(parse_document(joined.out).value).matrix(), j.matrix()) < 1e-9);

    const Result inv = invoke({"bayes", "--conditional", dir + "/cli_cb.json", "--marginal-a", dir + "/cli_ma.json",
                               "--marginal-b", dir + "/cli_mb.json"});
    REQUIRE(inv.code == kExitOk);
    const auto want = std::get<ConditionalState>(parse_document(ca.out).value);
    CHECK(max_abs_diff(std::get<ConditionalState>(parse_document(inv.out).value).matrix(), want.matrix()) < 1e-9);

    CHECK(invoke({"condition", "--joint", fixture("theorem_joint.json"), "--on", "C"}).code == kExitUsage);
}

TEST_CASE("rank-deficient conditional gives a support-restricted channel document") {
    const std::string dir = std::string(CONDCHOI_BINARY_DIR);
    const Result c = invoke({"condition", "--joint", fixture("deficient_joint.json")});
    REQUIRE(c.code == kExitOk);
    std::ofstream(dir + "/cli_deficient.json") << c.out;
    const Result ch = invoke({"channel", "--conditional", dir + "/cli_deficient.json"});
    REQUIRE(ch.code == kExitOk);
    CHECK(output_json(ch).contains("inputSupport"));
    CHECK_NOTHROW(parse_document(ch.out));
}

TEST_CASE("prepare and measure commands") {
    const std::string state = std::string(CONDCHOI_BINARY_DIR) + "/cli_state.json";
    std::ofstream(state) << serialize({reduce(
        std::get<JointState>(parse_document(slurp(fixture("theorem_joint.json"))).value), Side::A)});
    const Result p = invoke({"prepare", "--povm", fixture("theorem_povm_a.json"), "--state", state});
    REQUIRE(p.code == kExitOk);
    const Ensemble e = std::get<Ensemble>(parse_document(p.out).value);
    const State s = std::get<State>(parse_document(slurp(state)).value);
    CHECK(max_abs_diff(e.average(), s.matrix()) < 1e-9);

    const Result m = invoke({"measure", "--povm", fixture("theorem_povm_a.json"), "--state", state});
    REQUIRE(m.code == kExitOk);
    const auto probs = output_json(m)["probabilities"].get<std::vector<double>>();
    REQUIRE(probs.size() == e.weights.size());
    for (std::size_t i = 0; i < probs.size(); ++i) CHECK(std::abs(probs[i] - e.weights[i]) < 1e-12);

    const Result s1 = invoke({"sample", "--povm", fixture("theorem_povm_a.json"), "--state", state, "--seed", "3"});
    const Result s2 = invoke({"sample", "--povm", fixture("theorem_povm_a.json"), "--state", state, "--seed", "3"});
    REQUIRE(s1.code == kExitOk);
    CHECK(s1.out == s2.out);
}

TEST_CASE("random command is deterministic and valid") {
    for (const char *kind : {"state", "joint_state", "channel", "povm", "unitary"}) {
        const Result a = invoke({"random", "--kind", kind, "--shape", "2,1", "--shape-b", "2", "--seed", "9"});
        const Result b = invoke({"random", "--kind", kind, "--shape", "2,1", "--shape-b", "2", "--seed", "9"});
        REQUIRE(a.code == kExitOk);
        CHECK(a.out == b.out);
        CHECK_NOTHROW(parse_document(a.out));
    }
    CHECK(invoke({"random", "--shape", "2,x"}).code == kExitUsage);
}

TEST_CASE("exit codes") {
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"frobnicate"}).code == kExitUsage);
    CHECK(invoke({"choi"}).code == kExitUsage);
    CHECK(invoke({"--help"}).code == kExitOk);
    CHECK(invoke({"choi", "--channel", fixture("malformed.json")}).code == kExitParse);
    CHECK(invoke({"choi", "--channel", fixture("does_not_exist.json")}).code == kExitParse);
    const Result bad = invoke({"teleport", "--channel", fixture("identity_qubit_channel.json"), "--input",
                               fixture("trace_deficient_state.json")});
    CHECK(bad.code == kExitInvariant);
    CHECK(bad.err.find("trace") != std::string::npos);
    CHECK(invoke({"teleport", "--classical", "--channel", fixture("identity_qubit_channel.json"), "--input",
                  fixture("qubit_input.json")})
              .code == kExitInvariant);
    CHECK(invoke({"--tol", "1e-30", "verify-theorem", "--joint", fixture("theorem_joint.json"), "--povm-a",
                  fixture("theorem_povm_a.json"), "--povm-b", fixture("theorem_povm_b.json")})
              .code == kExitInvariant);
}

TEST_CASE("selftest report") {
    const SelftestReport r = run_selftest(7, 3, 1e-9);
    CHECK(r.pass());
    CHECK(r.checks.size() > 10);
    CHECK(r.max_deviation() < 1e-9);
    const Result cmd = invoke({"selftest", "--seed", "7", "--trials", "3"});
    CHECK(cmd.code == kExitOk);
    CHECK(output_json(cmd)["pass"] == true);
    CHECK(invoke({"selftest", "--seed", "7", "--trials", "3"}).out == cmd.out);
    CHECK(invoke({"--tol", "1e-300", "selftest", "--seed", "7", "--trials", "1"}).code == kExitInvariant);
}
