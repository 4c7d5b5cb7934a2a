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

#include "condchoi/cli/documents.hpp"

#include <algorithm>
#include <string>

namespace condchoi::cli {
namespace {

[[noreturn]] void schema_error(const std::string &what) {
    throw Error(ErrorKind::SyntaxError, what);
}

const Json &field(const Json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) {
        schema_error(std::string("missing field '") + name + "'");
    }
    return j.at(name);
}

cplx complex_from_json(const Json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    schema_error("complex entries must be [re, im] or a real number");
}

std::vector<ComplexMatrix> matrices_from_json(const Json &j, const char *name) {
    const Json &arr = field(j, name);
    if (!arr.is_array()) {
        schema_error(std::string("'") + name + "' must be an array of matrices");
    }
    std::vector<ComplexMatrix> out;
    out.reserve(arr.size());
    for (const auto &m : arr) {
        out.push_back(matrix_from_json(m));
    }
    return out;
}

Json matrices_to_json(const std::vector<ComplexMatrix> &ms) {
    Json arr = Json::array();
    for (const auto &m : ms) {
        arr.push_back(matrix_to_json(m));
    }
    return arr;
}

Json probability_matrix(const ProbabilityMatrix &p) {
    Json arr = Json::array();
    for (const auto &row : p) {
        arr.push_back(row);
    }
    return arr;
}

} // namespace

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string &what)
    : Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": " + what),
      line_(line), column_(column) {}

std::string_view to_string(DocumentKind kind) noexcept {
    switch (kind) {
    case DocumentKind::State:
        return "state";
    case DocumentKind::JointState:
        return "joint_state";
    case DocumentKind::Conditional:
        return "conditional";
    case DocumentKind::Channel:
        return "channel";
    case DocumentKind::Povm:
        return "povm";
    case DocumentKind::Ensemble:
        return "ensemble";
    }
    return "unknown";
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error &e) {
        // e.byte is 1-based and points just past the offending character.
        const std::size_t pos = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i < pos; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw SyntaxError(line, col, e.what());
    }
}

Json matrix_to_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const Json &j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) {
        schema_error("matrix must be a non-empty array of rows");
    }
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    std::vector<cplx> entries;
    entries.reserve(rows * cols);
    for (const auto &row : j) {
        if (!row.is_array() || row.size() != cols) {
            schema_error("matrix rows must all have the same length");
        }
        for (const auto &z : row) {
            entries.push_back(complex_from_json(z));
        }
    }
    return {rows, cols, std::move(entries)};
}

Json shape_to_json(const AlgebraShape &s) { return s.blocks(); }

AlgebraShape shape_from_json(const Json &j) {
    if (!j.is_array() || j.empty()) {
        schema_error("shape must be a non-empty array of block dimensions");
    }
    std::vector<std::size_t> dims;
    for (const auto &d : j) {
        if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) {
            schema_error("block dimensions must be positive integers");
        }
        dims.push_back(d.get<std::size_t>());
    }
    return AlgebraShape(std::move(dims));
}

Json to_json(const State &s) {
    return {{"kind", "state"},
            {"shape", shape_to_json(s.shape())},
            {"matrix", matrix_to_json(s.matrix())}};
}

Json to_json(const JointState &j) {
    return {{"kind", "joint_state"},
            {"shapeA", shape_to_json(j.shape_a())},
            {"shapeB", shape_to_json(j.shape_b())},
            {"matrix", matrix_to_json(j.matrix())}};
}

Json to_json(const ConditionalState &c) {
    return {{"kind", "conditional"},
            {"conditioningShape", shape_to_json(c.conditioning_shape())},
            {"conditionedShape", shape_to_json(c.conditioned_shape())},
            {"matrix", matrix_to_json(c.matrix())}};
}

Json to_json(const Channel &c) {
    Json j{{"kind", "channel"},
           {"shapeIn", shape_to_json(c.shape_in())},
           {"shapeOut", shape_to_json(c.shape_out())},
           {"kraus", matrices_to_json(c.kraus())}};
    if (c.support_restricted()) {
        j["inputSupport"] = matrix_to_json(c.input_support());
    }
    return j;
}

Json to_json(const Povm &p) {
    return {{"kind", "povm"},
            {"shape", shape_to_json(p.shape())},
            {"elements", matrices_to_json(p.elements())}};
}

Json to_json(const Ensemble &e) {
    Json members = Json::array();
    for (const auto &m : e.members) {
        members.push_back(matrix_to_json(m.matrix()));
    }
    return {{"kind", "ensemble"},
            {"shape", e.members.empty() ? Json::array()
                                        : shape_to_json(e.members.front().shape())},
            {"weights", e.weights},
            {"outcomes", e.outcomes},
            {"members", std::move(members)}};
}

Json to_json(const TheoremReport &r) {
    return {{"kind", "theorem_report"},
            {"lhs", probability_matrix(r.lhs)},
            {"rhs", probability_matrix(r.rhs)},
            {"maxDeviation", r.max_deviation},
            {"supportRestricted", r.support_restricted}};
}

Json to_json(const TeleportReport &r) {
    Json branches = Json::array();
    Json corrected = Json::array();
    for (std::size_t i = 0; i < r.branch_states.size(); ++i) {
        branches.push_back(r.branch_states[i] ? matrix_to_json(r.branch_states[i]->matrix())
                                              : Json(nullptr));
        corrected.push_back(r.corrected_states[i]
                                ? matrix_to_json(r.corrected_states[i]->matrix())
                                : Json(nullptr));
    }
    Json j{{"kind", "teleport_report"},
           {"successProbability", r.success_probability},
           {"probabilities", r.outcome_probabilities},
           {"successOutcome", r.success_outcome},
           {"groupingUsed", r.grouping_used},
           {"bobStateOnSuccess", to_json(r.bob_state_on_success)},
           {"branchStates", std::move(branches)},
           {"correctedStates", std::move(corrected)}};
    if (!r.ungrouped_probabilities.empty()) {
        j["ungroupedProbabilities"] = r.ungrouped_probabilities;
    }
    return j;
}

Json to_json(const Document &doc) {
    return std::visit([](const auto &v) { return to_json(v); }, doc.value);
}

std::string serialize(const Document &doc) { return to_json(doc).dump(2) + "\n"; }

Document document_from_json(const Json &j) {
    const Json &kind = field(j, "kind");
    if (!kind.is_string()) {
        schema_error("'kind' must be a string");
    }
    const auto k = kind.get<std::string>();
    if (k == "state") {
        return {State(shape_from_json(field(j, "shape")),
                      matrix_from_json(field(j, "matrix")))};
    }
    if (k == "joint_state") {
        return {JointState(shape_from_json(field(j, "shapeA")),
                           shape_from_json(field(j, "shapeB")),
                           matrix_from_json(field(j, "matrix")))};
    }
    if (k == "conditional") {
        return {ConditionalState(shape_from_json(field(j, "conditioningShape")),
                                 shape_from_json(field(j, "conditionedShape")),
                                 matrix_from_json(field(j, "matrix")))};
    }
    if (k == "channel") {
        AlgebraShape in = shape_from_json(field(j, "shapeIn"));
        AlgebraShape out = shape_from_json(field(j, "shapeOut"));
        auto kraus = matrices_from_json(j, "kraus");
        if (j.contains("inputSupport")) {
            return {Channel::on_support(std::move(in), std::move(out), std::move(kraus),
                                        matrix_from_json(j.at("inputSupport")))};
        }
        return {Channel(std::move(in), std::move(out), std::move(kraus))};
    }
    if (k == "povm") {
        return {Povm(shape_from_json(field(j, "shape")), matrices_from_json(j, "elements"))};
    }
    if (k == "ensemble") {
        const AlgebraShape shape = shape_from_json(field(j, "shape"));
        const Json &w = field(j, "weights");
        if (!w.is_array()) {
            schema_error("'weights' must be an array");
        }
        std::vector<State> members;
        for (auto &m : matrices_from_json(j, "members")) {
            members.emplace_back(shape, std::move(m));
        }
        Ensemble e = make_ensemble(w.get<std::vector<double>>(), std::move(members));
        if (j.contains("outcomes")) {
            e.outcomes = j.at("outcomes").get<std::vector<std::size_t>>();
            if (e.outcomes.size() != e.members.size()) {
                schema_error("'outcomes' must have one entry per member");
            }
        }
        return {std::move(e)};
    }
    schema_error("unknown document kind '" + k + "'");
}

Document parse_document(std::string_view text) {
    const Json j = parse_json(text);
    try {
        return document_from_json(j);
    } catch (const Json::exception &e) {
        schema_error(e.what());
    }
}

} // namespace condchoi::cli
