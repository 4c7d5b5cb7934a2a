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
 * Invariant suite over seeded random instances.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace condchoi::cli {

struct SelftestCheck {
    std::string name;
    std::size_t instances = 0;
    double max_deviation = 0.0;
    double threshold = 0.0;

    [[nodiscard]] bool pass() const noexcept { return max_deviation < threshold; }
};

struct SelftestReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<SelftestCheck> checks;

    [[nodiscard]] bool pass() const noexcept;
    [[nodiscard]] double max_deviation() const noexcept;
};

/// Each trial draws its instances from a generator split off the seed, so a
/// report depends only on (seed, trials, tol).
SelftestReport run_selftest(std::uint64_t seed, std::size_t trials, double tol);

} // namespace condchoi::cli
