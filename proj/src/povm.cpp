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

#include "condchoi/povm.hpp"

#include "condchoi/error.hpp"
#include "condchoi/linalg.hpp"
#include "condchoi/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace condchoi {
namespace {

constexpr double kPovmPositivity = 1e-10;
constexpr double kPovmSum = 1e-9;
constexpr double kEnsembleTol = 1e-9;

void require_shape(const Povm &m, const State &s) {
    if (!(m.shape() == s.shape())) {
        throw Error(ErrorKind::ShapeMismatch,
                    "POVM on " + to_string(m.shape()) + ", state on " +
                        to_string(s.shape()));
    }
}

} // namespace

Povm::Povm(AlgebraShape shape, std::vector<ComplexMatrix> elements)
    : shape_(std::move(shape)), elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "POVM has no elements");
    }
    const std::size_t d = shape_.total_dim();
    ComplexMatrix total(d, d);
    for (std::size_t j = 0; j < elements_.size(); ++j) {
        const ComplexMatrix &e = elements_[j];
        if (!e.is_square() || e.rows() != d) {
            throw Error(ErrorKind::DimensionMismatch,
                        "POVM element " + std::to_string(j) + " does not fit " +
                            to_string(shape_));
        }
        const double herm = hermiticity_deviation(e);
        if (!(herm <= kPovmPositivity)) {
            throw InvariantViolation("hermitian", herm);
        }
        const double neg = std::max(0.0, -min_eigenvalue(e));
        if (!(neg <= kPovmPositivity)) {
            throw InvariantViolation("positive", neg);
        }
        const double sup = block_support_deviation(e, shape_);
        if (!(sup <= 1e-12)) {
            throw InvariantViolation("block_support", sup);
        }
        total += e;
    }
    const double dev = max_abs_diff(total, ComplexMatrix::identity(d));
    if (!(dev <= kPovmSum)) {
        throw InvariantViolation("sum_to_identity", dev);
    }
}

Povm Povm::computational(const AlgebraShape &shape) {
    const std::size_t d = shape.total_dim();
    std::vector<ComplexMatrix> els;
    els.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        els.push_back(ComplexMatrix::unit(d, j, j));
    }
    return {shape, std::move(els)};
}

Povm Povm::trivial(const AlgebraShape &shape) {
    return {shape, {ComplexMatrix::identity(shape.total_dim())}};
}

Povm Povm::transpose() const {
    std::vector<ComplexMatrix> els;
    els.reserve(elements_.size());
    for (const auto &e : elements_) {
        els.push_back(e.transpose());
    }
    return {shape_, std::move(els)};
}

ComplexMatrix Ensemble::average() const {
    if (members.empty()) {
        return {};
    }
    const std::size_t d = members.front().dim();
    ComplexMatrix avg(d, d);
    for (std::size_t j = 0; j < members.size(); ++j) {
        avg += members[j].matrix() * weights[j];
    }
    return avg;
}

Ensemble make_ensemble(std::vector<double> weights, std::vector<State> members) {
    if (weights.size() != members.size() || members.empty()) {
        throw Error(ErrorKind::InvalidArgument,
                    "ensemble needs one weight per member and at least one member");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) {
            throw InvariantViolation("nonnegative_weights", -w);
        }
        sum += w;
    }
    if (!(std::abs(sum - 1.0) <= kEnsembleTol)) {
        throw InvariantViolation("weights_sum", std::abs(sum - 1.0));
    }
    for (const auto &m : members) {
        if (!(m.shape() == members.front().shape())) {
            throw Error(ErrorKind::ShapeMismatch, "ensemble members on different shapes");
        }
    }
    Ensemble e{std::move(weights), std::move(members), {}};
    e.outcomes.resize(e.members.size());
    std::iota(e.outcomes.begin(), e.outcomes.end(), std::size_t{0});
    return e;
}

std::vector<double> measure(const Povm &m, const State &s) {
    require_shape(m, s);
    std::vector<double> probs;
    probs.reserve(m.size());
    for (const auto &e : m.elements()) {
        probs.push_back(trace_product(e, s.matrix()).real());
    }
    return probs;
}

Ensemble prepare(const Povm &m, const State &s) {
    require_shape(m, s);
    const ComplexMatrix root = mat_sqrt(s.matrix());
    Ensemble e;
    for (std::size_t j = 0; j < m.size(); ++j) {
        const double p = trace_product(m[j], s.matrix()).real();
        if (p <= kZeroProbability) {
            continue;
        }
        ComplexMatrix rho = root * m[j] * root * (1.0 / p);
        e.weights.push_back(p);
        e.members.emplace_back(s.shape(), std::move(rho));
        e.outcomes.push_back(j);
    }
    return e;
}

Povm povm_from_ensemble(const Ensemble &e, const State &s) {
    if (e.members.empty()) {
        throw Error(ErrorKind::InvalidArgument, "empty ensemble");
    }
    const std::size_t d = s.dim();
    for (const auto &m : e.members) {
        if (!(m.shape() == s.shape())) {
            throw Error(ErrorKind::ShapeMismatch, "ensemble member on " +
                                                      to_string(m.shape()));
        }
    }
    const double avg_dev = max_abs_diff(e.average(), s.matrix());
    if (!(avg_dev <= kEnsembleTol)) {
        throw Error(ErrorKind::InvalidArgument,
                    "ensemble does not average to the state (deviation " +
                        std::to_string(avg_dev) + ")");
    }
    const ComplexMatrix id = ComplexMatrix::identity(d);
    const ComplexMatrix outside = id - support_projector(s.matrix());
    for (std::size_t j = 0; j < e.members.size(); ++j) {
        const double leak = frobenius_norm(outside * e.members[j].matrix());
        if (leak > kEnsembleTol) {
            throw Error(ErrorKind::SupportViolation,
                        "member " + std::to_string(j) +
                            " leaves the support of the state (" +
                            std::to_string(leak) + ")");
        }
    }
    const ComplexMatrix inv_root = gen_inv_sqrt(s.matrix());
    std::vector<ComplexMatrix> elements;
    elements.reserve(e.members.size() + 1);
    ComplexMatrix total(d, d);
    for (std::size_t j = 0; j < e.members.size(); ++j) {
        ComplexMatrix mj = project_embedded(
            inv_root * e.members[j].matrix() * inv_root * e.weights[j], s.shape());
        total += mj;
        elements.push_back(std::move(mj));
    }
    ComplexMatrix completion = id - total;
    if (frobenius_norm(completion) > kEnsembleTol) {
        elements.push_back(
            project_embedded((completion + completion.adjoint()) * 0.5, s.shape()));
    }
    return {s.shape(), std::move(elements)};
}

std::vector<std::uint64_t> sample(const Povm &m, const State &s, Rng &rng,
                                  std::uint64_t n) {
    const std::vector<double> probs = measure(m, s);
    std::vector<double> cdf(probs.size());
    double acc = 0.0;
    for (std::size_t j = 0; j < probs.size(); ++j) {
        acc += std::max(probs[j], 0.0);
        cdf[j] = acc;
    }
    std::vector<std::uint64_t> counts(probs.size(), 0);
    for (std::uint64_t t = 0; t < n; ++t) {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto idx = std::min<std::size_t>(
            static_cast<std::size_t>(it - cdf.begin()), probs.size() - 1);
        ++counts[idx];
    }
    return counts;
}

} // namespace condchoi
