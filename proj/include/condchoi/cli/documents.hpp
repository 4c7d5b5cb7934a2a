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
 * JSON interchange documents.
 *
 * Every document is an object with a mandatory "kind" tag. Complex numbers
 * are two-element arrays [re, im]; matrices are row-major nested arrays of
 * them; shapes are integer arrays of block dimensions.
 *
 *   state        {"kind","shape","matrix"}
 *   joint_state  {"kind","shapeA","shapeB","matrix"}          A is the slow factor
 *   conditional  {"kind","conditioningShape","conditionedShape","matrix"}
 *   channel      {"kind","shapeIn","shapeOut","kraus":[matrix...]}
 *                optional "inputSupport": matrix (support-restricted channels)
 *   povm         {"kind","shape","elements":[matrix...]}
 *   ensemble     {"kind","shape","weights","outcomes","members":[matrix...]}
 *
 * Doubles are written in shortest round-trip form, so parse(serialize(x))
 * reproduces x bit for bit.
 */
#pragma once

#include "condchoi/channels.hpp"
#include "condchoi/conditional.hpp"
#include "condchoi/error.hpp"
#include "condchoi/povm.hpp"
#include "condchoi/scenarios.hpp"
#include "condchoi/states.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

namespace condchoi::cli {

using Json = nlohmann::json;

/// Malformed JSON; line and column are 1-based.
class SyntaxError : public Error {
  public:
    SyntaxError(std::size_t line, std::size_t column, const std::string &what);

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

enum class DocumentKind { State, JointState, Conditional, Channel, Povm, Ensemble };

std::string_view to_string(DocumentKind kind) noexcept;

using DocumentValue =
    std::variant<State, JointState, ConditionalState, Channel, Povm, Ensemble>;

struct Document {
    DocumentValue value;

    [[nodiscard]] DocumentKind kind() const noexcept {
        return static_cast<DocumentKind>(value.index());
    }
};

/// Text -> JSON with line/column on failure.
Json parse_json(std::string_view text);

/// SyntaxError on bad JSON or schema; InvariantViolation (with the failing
/// invariant's name) when the payload does not satisfy its type.
Document parse_document(std::string_view text);
Document document_from_json(const Json &j);

std::string serialize(const Document &doc);
Json to_json(const Document &doc);

Json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const Json &j);
Json shape_to_json(const AlgebraShape &s);
AlgebraShape shape_from_json(const Json &j);

Json to_json(const State &s);
Json to_json(const JointState &j);
Json to_json(const ConditionalState &c);
Json to_json(const Channel &c);
Json to_json(const Povm &p);
Json to_json(const Ensemble &e);
Json to_json(const TheoremReport &r);
Json to_json(const TeleportReport &r);

/// Parse and require a particular kind.
template <typename T> T expect(const Document &doc, DocumentKind kind) {
    if (doc.kind() != kind) {
        throw Error(ErrorKind::SyntaxError,
                    "expected a " + std::string(to_string(kind)) + " document, got " +
                        std::string(to_string(doc.kind())));
    }
    return std::get<T>(doc.value);
}

} // namespace condchoi::cli
