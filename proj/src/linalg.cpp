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

#include "condchoi/linalg.hpp"

#include "condchoi/error.hpp"
#include "condchoi/kernels.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace condchoi {
namespace {

using EigenMatrix =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void require_square(const ComplexMatrix &m, const char *op) {
    if (!m.is_square()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(op) + " needs a square matrix");
    }
}

// Relative threshold for "first non-negligible component" in the phase
// convention; keeps the choice stable against round-off in ~0 entries.
constexpr double kPhaseTol = 1e-12;

void fix_phase(ComplexMatrix &v, std::size_t col) {
    for (std::size_t r = 0; r < v.rows(); ++r) {
        const cplx z = v(r, col);
        if (std::abs(z) > kPhaseTol) {
            const cplx phase = std::conj(z) / std::abs(z);
            for (std::size_t k = 0; k < v.rows(); ++k) {
                v(k, col) *= phase;
            }
            v(r, col) = std::abs(z);
            return;
        }
    }
}

EigenSystem checked_psd_eig(const ComplexMatrix &p, double tol,
                            const char *op) {
    EigenSystem es = herm_eig(p, std::max(tol, kHermitianTol));
    if (!es.values.empty() && es.values.back() < -tol) {
        throw Error(ErrorKind::NotPositive,
                    std::string(op) + ": eigenvalue " +
                        std::to_string(es.values.back()));
    }
    return es;
}

} // namespace

ComplexMatrix
EigenSystem::reconstruct(const std::function<double(double)> &f) const {
    const std::size_t n = values.size();
    ComplexMatrix scaled(n, n);
    // scaled = V * diag(f), then scaled * V^dagger
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            scaled(r, c) = vectors(r, c) * f(values[c]);
        }
    }
    return scaled * vectors.adjoint();
}

ComplexMatrix EigenSystem::reconstruct() const {
    return reconstruct([](double x) { return x; });
}

EigenSystem herm_eig(const ComplexMatrix &m, double tol) {
    require_square(m, "herm_eig");
    const double dev = hermiticity_deviation(m);
    if (!(dev <= tol)) {
        throw Error(ErrorKind::NotHermitian,
                    "max |m - m^dagger| = " + std::to_string(dev));
    }
    const std::size_t n = m.rows();
    EigenMatrix sym(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            sym(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                0.5 * (m(r, c) + std::conj(m(c, r)));
        }
    }
    Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::NoConvergence, "Hermitian eigensolver");
    }

    // Eigen returns ascending order.
    EigenSystem es;
    es.values.resize(n);
    es.vectors = ComplexMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto src = static_cast<Eigen::Index>(n - 1 - i);
        es.values[i] = solver.eigenvalues()(src);
        for (std::size_t r = 0; r < n; ++r) {
            es.vectors(r, i) =
                solver.eigenvectors()(static_cast<Eigen::Index>(r), src);
        }
        fix_phase(es.vectors, i);
    }
    return es;
}

double rank_cutoff(const EigenSystem &es, double rank_tol) {
    const double top =
        es.values.empty() ? 0.0 : std::max(es.values.front(), 0.0);
    return std::max(rank_tol * top, kRankFloor);
}

ComplexMatrix mat_sqrt(const ComplexMatrix &p, double tol) {
    const EigenSystem es = checked_psd_eig(p, tol, "mat_sqrt");
    return es.reconstruct([](double x) { return std::sqrt(std::max(x, 0.0)); });
}

ComplexMatrix gen_inv_sqrt(const ComplexMatrix &p, double rank_tol) {
    const EigenSystem es = checked_psd_eig(p, rank_tol, "gen_inv_sqrt");
    const double cut = rank_cutoff(es, rank_tol);
    return es.reconstruct(
        [cut](double x) { return x > cut ? 1.0 / std::sqrt(x) : 0.0; });
}

ComplexMatrix support_projector(const ComplexMatrix &p, double rank_tol) {
    const EigenSystem es = checked_psd_eig(p, rank_tol, "support_projector");
    const double cut = rank_cutoff(es, rank_tol);
    return es.reconstruct([cut](double x) { return x > cut ? 1.0 : 0.0; });
}

std::size_t numerical_rank(const ComplexMatrix &p, double rank_tol) {
    const EigenSystem es = checked_psd_eig(p, rank_tol, "numerical_rank");
    const double cut = rank_cutoff(es, rank_tol);
    return static_cast<std::size_t>(std::count_if(
        es.values.begin(), es.values.end(), [cut](double x) { return x > cut; }));
}

double min_eigenvalue(const ComplexMatrix &m, double tol) {
    const EigenSystem es = herm_eig(m, tol);
    return es.values.empty() ? 0.0 : es.values.back();
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    ComplexMatrix out(rows, cols);
    const auto &k = kernels::active();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            for (std::size_t r = 0; r < b.rows(); ++r) {
                cplx *dst = &out(i * b.rows() + r, j * b.cols());
                k.scale(aij, b.row(r).data(), dst, b.cols());
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &m, std::size_t dim_left,
                            std::size_t dim_right, Side keep) {
    const std::size_t n = dim_left * dim_right;
    if (!m.is_square() || m.rows() != n) {
        throw Error(ErrorKind::DimensionMismatch,
                    "partial_trace: " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " is not (" +
                        std::to_string(dim_left) + "*" +
                        std::to_string(dim_right) + ")^2");
    }
    if (keep == Side::A) {
        ComplexMatrix out(dim_left, dim_left);
        for (std::size_t i = 0; i < dim_left; ++i) {
            for (std::size_t j = 0; j < dim_left; ++j) {
                cplx s{};
                for (std::size_t k = 0; k < dim_right; ++k) {
                    s += m(i * dim_right + k, j * dim_right + k);
                }
                out(i, j) = s;
            }
        }
        return out;
    }
    // Sum of the diagonal blocks; each block row is contiguous.
    ComplexMatrix out(dim_right, dim_right);
    const auto &k = kernels::active();
    for (std::size_t a = 0; a < dim_left; ++a) {
        for (std::size_t r = 0; r < dim_right; ++r) {
            const cplx *src = &m(a * dim_right + r, a * dim_right);
            k.axpy(1.0, src, &out(r, 0), dim_right);
        }
    }
    return out;
}

ComplexMatrix swap_factors(const ComplexMatrix &m, std::size_t dim_left,
                           std::size_t dim_right) {
    const std::size_t n = dim_left * dim_right;
    if (!m.is_square() || m.rows() != n) {
        throw Error(ErrorKind::DimensionMismatch, "swap_factors");
    }
    ComplexMatrix out(n, n);
    for (std::size_t a = 0; a < dim_left; ++a) {
        for (std::size_t b = 0; b < dim_right; ++b) {
            for (std::size_t a2 = 0; a2 < dim_left; ++a2) {
                for (std::size_t b2 = 0; b2 < dim_right; ++b2) {
                    out(b * dim_left + a, b2 * dim_left + a2) =
                        m(a * dim_right + b, a2 * dim_right + b2);
                }
            }
        }
    }
    return out;
}

double idempotence_deviation(const ComplexMatrix &m) {
    return max_abs_diff(m * m, m);
}

} // namespace condchoi
