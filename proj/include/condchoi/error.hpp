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
 * Error kinds raised across the library. Every failure carries an
 * ErrorKind so front ends can map it to an exit code without string
 * matching.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace condchoi {

enum class ErrorKind {
    NotHermitian,
    NoConvergence,
    NotPositive,
    DimensionMismatch,
    ShapeMismatch,
    SupportMismatch,
    SupportViolation,
    NotTracePreserving,
    BasisNotPOVM,
    InvariantViolation,
    InvalidArgument,
    SyntaxError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

/// A validated invariant failed; `invariant` names it and `deviation` is
/// the measured distance from the allowed region.
class InvariantViolation : public Error {
  public:
    InvariantViolation(std::string invariant, double deviation);

    [[nodiscard]] const std::string &invariant() const noexcept {
        return invariant_;
    }
    [[nodiscard]] double deviation() const noexcept { return deviation_; }

  private:
    std::string invariant_;
    double deviation_;
};

} // namespace condchoi
