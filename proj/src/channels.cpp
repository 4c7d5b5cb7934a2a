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

#include "condchoi/channels.hpp"

#include "condchoi/error.hpp"
#include "condchoi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace condchoi {
namespace {

void require_kraus_dims(const AlgebraShape &in, const AlgebraShape &out,
                        const std::vector<ComplexMatrix> &kraus) {
    if (kraus.empty()) {
        throw Error(ErrorKind::InvalidArgument, "channel needs at least one Kraus operator");
    }
    for (const auto &k : kraus) {
        if (k.rows() != out.total_dim() || k.cols() != in.total_dim()) {
            throw Error(ErrorKind::DimensionMismatch,
                        "Kraus operator " + std::to_string(k.rows()) + "x" +
                            std::to_string(k.cols()) + " for channel " +
                            to_string(in) + " -> " + to_string(out));
        }
    }
}

ComplexMatrix kraus_sum(const std::vector<ComplexMatrix> &kraus) {
    ComplexMatrix s(kraus.front().cols(), kraus.front().cols());
    for (const auto &k : kraus) {
        s += k.adjoint() * k;
    }
    return s;
}

ComplexMatrix apply_kraus(const std::vector<ComplexMatrix> &kraus,
                          const ComplexMatrix &x) {
    ComplexMatrix out(kraus.front().rows(), kraus.front().rows());
    for (const auto &k : kraus) {
        out += sandwich(k, x);
    }
    return out;
}

// Largest off-block output entry over all input matrix units |j><k| of the
// input algebra.
double output_support_deviation(
    const AlgebraShape &in, const AlgebraShape &out,
    const std::function<ComplexMatrix(const ComplexMatrix &)> &map) {
    const std::size_t n = in.total_dim();
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (in.same_block(j, k)) {
                worst = std::max(worst, block_support_deviation(
                                            map(ComplexMatrix::unit(n, j, k)), out));
            }
        }
    }
    return worst;
}

// Kraus operators K[b][j] = sqrt(lambda) v[j * dout + b] from the Choi form
// sum_{jk} |j><k| (x) E(|j><k|) on in (x) out.
std::vector<ComplexMatrix> kraus_from_choi(const ComplexMatrix &choi,
                                           std::size_t din, std::size_t dout) {
    const EigenSystem es = herm_eig(choi, 1e-9);
    const double cut = rank_cutoff(es, kKrausCutoff);
    std::vector<ComplexMatrix> kraus;
    for (std::size_t i = 0; i < es.values.size(); ++i) {
        if (es.values[i] <= cut) {
            break;
        }
        const double w = std::sqrt(es.values[i]);
        ComplexMatrix k(dout, din);
        for (std::size_t j = 0; j < din; ++j) {
            for (std::size_t b = 0; b < dout; ++b) {
                k(b, j) = w * es.vectors(j * dout + b, i);
            }
        }
        kraus.push_back(std::move(k));
    }
    if (kraus.empty()) {
        kraus.emplace_back(dout, din);
    }
    return kraus;
}

} // namespace

Channel::Channel(AlgebraShape in, AlgebraShape out,
                 std::vector<ComplexMatrix> kraus, double tol)
    : in_(std::move(in)), out_(std::move(out)), kraus_(std::move(kraus)) {
    require_kraus_dims(in_, out_, kraus_);
    const double tp = max_abs_diff(kraus_sum(kraus_),
                                   ComplexMatrix::identity(in_.total_dim()));
    if (!(tp <= tol)) {
        throw Error(ErrorKind::NotTracePreserving,
                    "max |sum K^dagger K - I| = " + std::to_string(tp));
    }
    const double sup = output_support_deviation(
        in_, out_, [this](const ComplexMatrix &x) { return apply_kraus(kraus_, x); });
    if (!(sup <= tol)) {
        throw InvariantViolation("block_support", sup);
    }
}

Channel::Channel(AlgebraShape in, AlgebraShape out,
                 std::vector<ComplexMatrix> kraus, ComplexMatrix input_support,
                 double tol, SupportTag)
    : in_(std::move(in)), out_(std::move(out)), kraus_(std::move(kraus)),
      support_(std::move(input_support)) {
    require_kraus_dims(in_, out_, kraus_);
    const double tp = max_abs_diff(kraus_sum(kraus_), *support_);
    if (!(tp <= tol)) {
        throw Error(ErrorKind::NotTracePreserving,
                    "max |sum K^dagger K - P_support| = " + std::to_string(tp));
    }
    const double sup = output_support_deviation(
        in_, out_, [this](const ComplexMatrix &x) { return apply_kraus(kraus_, x); });
    if (!(sup <= tol)) {
        throw InvariantViolation("block_support", sup);
    }
}

Channel Channel::on_support(AlgebraShape in, AlgebraShape out,
                            std::vector<ComplexMatrix> kraus,
                            ComplexMatrix input_support, double tol) {
    return {std::move(in), std::move(out), std::move(kraus),
            std::move(input_support), tol, SupportTag{}};
}

ComplexMatrix Channel::input_support() const {
    return support_ ? *support_ : ComplexMatrix::identity(in_.total_dim());
}

ComplexMatrix apply_operator(const Channel &c, const ComplexMatrix &x) {
    if (!x.is_square() || x.rows() != c.shape_in().total_dim()) {
        throw Error(ErrorKind::ShapeMismatch, "operator does not fit channel input " +
                                                  to_string(c.shape_in()));
    }
    return apply_kraus(c.kraus(), x);
}

State apply(const Channel &c, const State &s) {
    if (!(s.shape() == c.shape_in())) {
        throw Error(ErrorKind::ShapeMismatch,
                    "state on " + to_string(s.shape()) + ", channel expects " +
                        to_string(c.shape_in()));
    }
    return {c.shape_out(), apply_kraus(c.kraus(), s.matrix())};
}

ConditionalState max_ent_conditional(const AlgebraShape &shape) {
    const std::size_t d = shape.total_dim();
    ComplexMatrix m(d * d, d * d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
            if (shape.same_block(j, k)) {
                m(j * d + j, k * d + k) = 1.0;
            }
        }
    }
    return {shape, shape, std::move(m)};
}

ComplexMatrix choi_of_map(
    const AlgebraShape &in, std::size_t out_dim,
    const std::function<ComplexMatrix(const ComplexMatrix &)> &map) {
    const std::size_t din = in.total_dim();
    ComplexMatrix choi(din * out_dim, din * out_dim);
    for (std::size_t j = 0; j < din; ++j) {
        for (std::size_t k = 0; k < din; ++k) {
            if (!in.same_block(j, k)) {
                continue;
            }
            const ComplexMatrix img = map(ComplexMatrix::unit(din, j, k));
            if (img.rows() != out_dim || img.cols() != out_dim) {
                throw Error(ErrorKind::DimensionMismatch, "map output dimension");
            }
            for (std::size_t b = 0; b < out_dim; ++b) {
                for (std::size_t b2 = 0; b2 < out_dim; ++b2) {
                    choi(j * out_dim + b, k * out_dim + b2) = img(b, b2);
                }
            }
        }
    }
    return choi;
}

ConditionalState choi_conditional(const Channel &c) {
    ComplexMatrix choi = choi_of_map(
        c.shape_in(), c.shape_out().total_dim(),
        [&c](const ComplexMatrix &x) { return apply_kraus(c.kraus(), x); });
    return {c.shape_in(), c.shape_out(), std::move(choi)};
}

Channel channel_from_conditional(const ConditionalState &cond) {
    const std::size_t din = cond.conditioning_shape().total_dim();
    const std::size_t dout = cond.conditioned_shape().total_dim();
    const ComplexMatrix proj = cond.conditioning_projector();
    const double idem = idempotence_deviation(proj);
    if (!(idem <= kChannelTol)) {
        throw Error(ErrorKind::NotTracePreserving,
                    "conditioning marginal is not a projector (deviation " +
                        std::to_string(idem) + ")");
    }
    auto kraus = kraus_from_choi(cond.matrix(), din, dout);
    const ComplexMatrix id = ComplexMatrix::identity(din);
    if (max_abs_diff(proj, id) <= kChannelTol) {
        return {cond.conditioning_shape(), cond.conditioned_shape(),
                std::move(kraus)};
    }
    // sum K^dagger K equals the transpose of the conditioning projector.
    return Channel::on_support(cond.conditioning_shape(), cond.conditioned_shape(),
                               std::move(kraus), proj.transpose());
}

ComplexMatrix apply_via_conditional(const ConditionalState &cond,
                                    const ComplexMatrix &sigma) {
    const AlgebraShape &in = cond.conditioning_shape();
    const std::size_t da = in.total_dim();
    const std::size_t db = cond.conditioned_shape().total_dim();
    if (!sigma.is_square() || sigma.rows() != da) {
        throw Error(ErrorKind::ShapeMismatch, "sigma does not fit conditioning system");
    }
    // Systems ordered A (x) A' (x) B.
    const ConditionalState plus = max_ent_conditional(in);
    const ComplexMatrix left = kron(plus.matrix(), ComplexMatrix::identity(db));
    const ComplexMatrix right = kron(sigma, cond.matrix());
    return partial_trace(left * right, da * da, db, Side::B);
}

ChannelReport validate_linear_map(
    const AlgebraShape &in, const AlgebraShape &out,
    const std::function<ComplexMatrix(const ComplexMatrix &)> &map, double tol) {
    ChannelReport r;
    const std::size_t din = in.total_dim();
    const ComplexMatrix choi = choi_of_map(in, out.total_dim(), map);
    r.tp_deviation =
        max_abs_diff(partial_trace(choi, din, out.total_dim(), Side::A),
                     ComplexMatrix::identity(din));
    r.choi_min_eigenvalue = min_eigenvalue(choi, 1e-9);
    r.support_deviation = output_support_deviation(in, out, map);
    r.trace_preserving = r.tp_deviation <= tol;
    r.completely_positive = r.choi_min_eigenvalue >= -tol;
    r.block_supported = r.support_deviation <= tol;
    return r;
}

ChannelReport validate_channel(const Channel &c, double tol) {
    ChannelReport r = validate_linear_map(
        c.shape_in(), c.shape_out(),
        [&c](const ComplexMatrix &x) { return apply_kraus(c.kraus(), x); }, tol);
    r.tp_deviation = max_abs_diff(kraus_sum(c.kraus()), c.input_support());
    r.trace_preserving = r.tp_deviation <= tol;
    return r;
}

std::vector<ComplexMatrix> canonical_kraus(const Channel &c) {
    return kraus_from_choi(choi_conditional(c).matrix(), c.shape_in().total_dim(),
                           c.shape_out().total_dim());
}

bool is_isometry(const Channel &c, double tol) {
    const ComplexMatrix choi = choi_of_map(
        c.shape_in(), c.shape_out().total_dim(),
        [&c](const ComplexMatrix &x) { return apply_kraus(c.kraus(), x); });
    const EigenSystem es = herm_eig(choi, 1e-9);
    const double t = choi.trace().real();
    if (std::abs(es.values.front() - t) > tol) {
        return false;
    }
    return std::all_of(es.values.begin() + 1, es.values.end(),
                       [tol](double x) { return std::abs(x) <= tol; });
}

bool is_unitary(const Channel &c, double tol) {
    return c.shape_in() == c.shape_out() && c.shape_in().is_irreducible() &&
           is_isometry(c, tol);
}

Channel identity_channel(const AlgebraShape &shape) {
    return {shape, shape, {ComplexMatrix::identity(shape.total_dim())}};
}

Channel depolarizing_channel(std::size_t d) {
    std::vector<ComplexMatrix> kraus;
    const double w = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            kraus.push_back(ComplexMatrix::unit(d, i, j) * w);
        }
    }
    const AlgebraShape shape = AlgebraShape::irreducible(d);
    return {shape, shape, std::move(kraus)};
}

Channel unitary_channel(const ComplexMatrix &u) {
    if (!u.is_square()) {
        throw Error(ErrorKind::DimensionMismatch, "unitary must be square");
    }
    const AlgebraShape shape = AlgebraShape::irreducible(u.rows());
    return {shape, shape, {u}};
}

Channel stochastic_channel(const std::vector<std::vector<double>> &rows) {
    if (rows.empty() || rows.front().empty()) {
        throw Error(ErrorKind::InvalidArgument, "empty stochastic matrix");
    }
    const std::size_t n = rows.size();
    const std::size_t m = rows.front().size();
    std::vector<ComplexMatrix> kraus;
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != m) {
            throw Error(ErrorKind::DimensionMismatch, "ragged stochastic matrix");
        }
        double sum = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            const double p = rows[i][k];
            if (p < 0.0) {
                throw Error(ErrorKind::InvalidArgument, "negative transition probability");
            }
            sum += p;
            if (p > 0.0) {
                ComplexMatrix kr(m, n);
                kr(k, i) = std::sqrt(p);
                kraus.push_back(std::move(kr));
            }
        }
        if (std::abs(sum - 1.0) > kChannelTol) {
            throw Error(ErrorKind::NotTracePreserving,
                        "row " + std::to_string(i) + " sums to " + std::to_string(sum));
        }
    }
    return {AlgebraShape::classical(n), AlgebraShape::classical(m), std::move(kraus)};
}

} // namespace condchoi
