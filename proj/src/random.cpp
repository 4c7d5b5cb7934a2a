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

#include "condchoi/random.hpp"

#include "condchoi/error.hpp"
#include "condchoi/linalg.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace condchoi {
namespace {

ComplexMatrix hermitize(const ComplexMatrix &m) {
    return (m + m.adjoint()) * 0.5;
}

ComplexMatrix normalized(ComplexMatrix m) {
    const double t = m.trace().real();
    return m * (1.0 / t);
}

} // namespace

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    const double u1 = 1.0 - uniform(); // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    return r * std::cos(theta);
}

cplx Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

Rng Rng::split() { return Rng(engine_()); }

ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng &rng) {
    ComplexMatrix g(rows, cols);
    for (auto &z : g.data()) {
        z = rng.complex_normal();
    }
    return g;
}

ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng &rng) {
    if (rows < cols) {
        throw Error(ErrorKind::InvalidArgument,
                    "isometry needs rows >= cols (" + std::to_string(rows) + " < " +
                        std::to_string(cols) + ")");
    }
    ComplexMatrix q = gaussian_matrix(rows, cols, rng);
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            cplx proj{};
            for (std::size_t r = 0; r < rows; ++r) {
                proj += std::conj(q(r, prev)) * q(r, c);
            }
            for (std::size_t r = 0; r < rows; ++r) {
                q(r, c) -= proj * q(r, prev);
            }
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < rows; ++r) {
            norm += std::norm(q(r, c));
        }
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < rows; ++r) {
            q(r, c) /= norm;
        }
    }
    return q;
}

ComplexMatrix random_unitary(std::size_t dim, Rng &rng) {
    return random_isometry(dim, dim, rng);
}

State random_state(const AlgebraShape &shape, Rng &rng,
                   std::optional<std::size_t> rank) {
    const std::size_t d = shape.total_dim();
    const std::size_t r = rank.value_or(d);
    if (r == 0) {
        throw Error(ErrorKind::InvalidArgument, "random_state rank must be positive");
    }
    const ComplexMatrix g = gaussian_matrix(d, r, rng);
    ComplexMatrix rho = project_embedded(hermitize(g * g.adjoint()), shape);
    return {shape, normalized(std::move(rho))};
}

ComplexMatrix random_projector(const AlgebraShape &shape, std::size_t rank,
                               Rng &rng) {
    const std::size_t d = shape.total_dim();
    if (rank > d) {
        throw Error(ErrorKind::InvalidArgument, "projector rank exceeds dimension");
    }
    // Spread the rank over blocks one unit at a time, uniformly among blocks
    // with spare capacity.
    std::vector<std::size_t> per_block(shape.num_blocks(), 0);
    for (std::size_t placed = 0; placed < rank; ++placed) {
        std::vector<std::size_t> open;
        for (std::size_t j = 0; j < shape.num_blocks(); ++j) {
            if (per_block[j] < shape.blocks()[j]) {
                open.push_back(j);
            }
        }
        const auto pick = static_cast<std::size_t>(
            rng.uniform() * static_cast<double>(open.size()));
        ++per_block[open[std::min(pick, open.size() - 1)]];
    }
    ComplexMatrix p(d, d);
    for (std::size_t j = 0; j < shape.num_blocks(); ++j) {
        if (per_block[j] == 0) {
            continue;
        }
        const std::size_t dj = shape.blocks()[j];
        const ComplexMatrix v = random_isometry(dj, per_block[j], rng);
        const ComplexMatrix pj = v * v.adjoint();
        const std::size_t off = shape.offset(j);
        for (std::size_t r = 0; r < dj; ++r) {
            for (std::size_t c = 0; c < dj; ++c) {
                p(off + r, off + c) = pj(r, c);
            }
        }
    }
    return p;
}

JointState random_joint_state(const AlgebraShape &a, const AlgebraShape &b,
                              Rng &rng, std::optional<std::size_t> marginal_rank) {
    const std::size_t n = a.total_dim() * b.total_dim();
    const ComplexMatrix g = gaussian_matrix(n, n, rng);
    ComplexMatrix rho = project_tensor(hermitize(g * g.adjoint()), a, b);
    if (marginal_rank) {
        if (*marginal_rank == 0) {
            throw Error(ErrorKind::InvalidArgument, "marginal rank must be positive");
        }
        const ComplexMatrix q =
            kron(random_projector(a, *marginal_rank, rng),
                 ComplexMatrix::identity(b.total_dim()));
        rho = hermitize(q * rho * q);
    }
    return {a, b, normalized(std::move(rho))};
}

Channel random_channel(const AlgebraShape &in, const AlgebraShape &out,
                       std::size_t env_dim, Rng &rng) {
    const std::size_t din = in.total_dim();
    const std::size_t dout = out.total_dim();
    if (env_dim == 0 || dout * env_dim < din) {
        throw Error(ErrorKind::InvalidArgument,
                    "environment dimension " + std::to_string(env_dim) +
                        " too small for " + to_string(in) + " -> " + to_string(out));
    }
    const ComplexMatrix v = random_isometry(dout * env_dim, din, rng);
    std::vector<ComplexMatrix> kraus;
    for (std::size_t e = 0; e < env_dim; ++e) {
        ComplexMatrix k(dout, din);
        for (std::size_t bo = 0; bo < dout; ++bo) {
            for (std::size_t j = 0; j < din; ++j) {
                k(bo, j) = v(bo * env_dim + e, j);
            }
        }
        // P_out_i K P_in_j for every block pair keeps the map inside the
        // algebras on both sides.
        for (std::size_t i = 0; i < out.num_blocks(); ++i) {
            for (std::size_t j = 0; j < in.num_blocks(); ++j) {
                ComplexMatrix kij(dout, din);
                bool nonzero = false;
                for (std::size_t r = 0; r < dout; ++r) {
                    for (std::size_t c = 0; c < din; ++c) {
                        if (out.block_of(r) == i && in.block_of(c) == j) {
                            kij(r, c) = k(r, c);
                            nonzero = nonzero || k(r, c) != cplx{};
                        }
                    }
                }
                if (nonzero) {
                    kraus.push_back(std::move(kij));
                }
            }
        }
    }
    const Channel raw(in, out, std::move(kraus));
    return {in, out, canonical_kraus(raw)};
}

Povm random_povm(const AlgebraShape &shape, std::size_t outcomes, Rng &rng) {
    if (outcomes == 0) {
        throw Error(ErrorKind::InvalidArgument, "POVM needs at least one outcome");
    }
    const std::size_t d = shape.total_dim();
    std::vector<ComplexMatrix> parts;
    ComplexMatrix total(d, d);
    for (std::size_t j = 0; j < outcomes; ++j) {
        const ComplexMatrix g = gaussian_matrix(d, d, rng);
        parts.push_back(project_embedded(hermitize(g * g.adjoint()), shape));
        total += parts.back();
    }
    const ComplexMatrix inv_root = gen_inv_sqrt(hermitize(total));
    std::vector<ComplexMatrix> elements;
    elements.reserve(outcomes);
    for (const auto &a : parts) {
        elements.push_back(
            project_embedded(hermitize(inv_root * a * inv_root), shape));
    }
    return {shape, std::move(elements)};
}

} // namespace condchoi
