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

// Reference implementations for tests: plain index loops and Eigen's own
// decompositions, written without calling the library routines they check.
#pragma once

#include "condchoi/channels.hpp"
#include "condchoi/error.hpp"
#include "condchoi/matrix.hpp"
#include "condchoi/random.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>

namespace oracle {

using condchoi::ComplexMatrix;
using condchoi::cplx;
using Dense = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;

inline Dense to_dense(const ComplexMatrix &m) {
    Dense d(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            d(r, c) = m(r, c);
        }
    }
    return d;
}

inline ComplexMatrix from_dense(const Dense &d) {
    ComplexMatrix m(d.rows(), d.cols());
    for (Eigen::Index r = 0; r < d.rows(); ++r) {
        for (Eigen::Index c = 0; c < d.cols(); ++c) {
            m(r, c) = d(r, c);
        }
    }
    return m;
}

inline ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                s += a(i, k) * b(k, j);
            }
            c(i, j) = s;
        }
    }
    return c;
}

inline ComplexMatrix dagger(const ComplexMatrix &a) {
    ComplexMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            t(j, i) = std::conj(a(i, j));
        }
    }
    return t;
}

inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    return k;
}

/// Tr over the right factor (keep_left) or the left factor.
inline ComplexMatrix ptrace(const ComplexMatrix &m, std::size_t dl, std::size_t dr,
                            bool keep_left) {
    if (keep_left) {
        ComplexMatrix out(dl, dl);
        for (std::size_t i = 0; i < dl; ++i)
            for (std::size_t j = 0; j < dl; ++j)
                for (std::size_t k = 0; k < dr; ++k)
                    out(i, j) += m(i * dr + k, j * dr + k);
        return out;
    }
    ComplexMatrix out(dr, dr);
    for (std::size_t p = 0; p < dr; ++p)
        for (std::size_t q = 0; q < dr; ++q)
            for (std::size_t i = 0; i < dl; ++i)
                out(p, q) += m(i * dr + p, i * dr + q);
    return out;
}

/// f applied to the spectrum via Eigen; eigenvalues at or below `cut` map to 0.
inline ComplexMatrix spectral(const ComplexMatrix &m, const std::function<double(double)> &f,
                              double cut = 0.0) {
    const Dense d = to_dense(m);
    Eigen::SelfAdjointEigenSolver<Dense> es((d + d.adjoint()) / 2.0);
    Eigen::VectorXd lam = es.eigenvalues();
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        lam(i) = lam(i) > cut ? f(lam(i)) : 0.0;
    }
    return from_dense(es.eigenvectors() * lam.cast<cplx>().asDiagonal() *
                      es.eigenvectors().adjoint());
}

inline ComplexMatrix sqrt_psd(const ComplexMatrix &m) {
    return spectral(m, [](double x) { return std::sqrt(x); });
}

inline double rel_cut(const ComplexMatrix &m) {
    const Dense d = to_dense(m);
    Eigen::SelfAdjointEigenSolver<Dense> es((d + d.adjoint()) / 2.0);
    return std::max(1e-10 * es.eigenvalues().cwiseAbs().maxCoeff(), 1e-14);
}

inline ComplexMatrix inv_sqrt_psd(const ComplexMatrix &m) {
    return spectral(m, [](double x) { return 1.0 / std::sqrt(x); }, rel_cut(m));
}

inline ComplexMatrix support(const ComplexMatrix &m) {
    return spectral(m, [](double) { return 1.0; }, rel_cut(m));
}

inline std::vector<double> eigenvalues(const ComplexMatrix &m) {
    const Dense d = to_dense(m);
    Eigen::SelfAdjointEigenSolver<Dense> es((d + d.adjoint()) / 2.0);
    return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

inline double max_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            d = std::max(d, std::abs(a(i, j) - b(i, j)));
    return d;
}

inline ComplexMatrix apply_kraus(const std::vector<ComplexMatrix> &kraus, const ComplexMatrix &x) {
    ComplexMatrix out(kraus.front().rows(), kraus.front().rows());
    for (const auto &k : kraus) {
        const ComplexMatrix t = matmul(matmul(k, x), dagger(k));
        for (std::size_t i = 0; i < t.rows(); ++i)
            for (std::size_t j = 0; j < t.cols(); ++j)
                out(i, j) += t(i, j);
    }
    return out;
}

/// sum_{j~k} |j><k| (x) E(|j><k|), j~k meaning same input block.
inline ComplexMatrix choi(const condchoi::Channel &c) {
    const auto &in = c.shape_in();
    const std::size_t din = in.total_dim();
    const std::size_t dout = c.shape_out().total_dim();
    ComplexMatrix out(din * dout, din * dout);
    for (std::size_t j = 0; j < din; ++j) {
        for (std::size_t k = 0; k < din; ++k) {
            if (in.block_of(j) != in.block_of(k)) {
                continue;
            }
            ComplexMatrix e(din, din);
            e(j, k) = 1.0;
            const ComplexMatrix img = apply_kraus(c.kraus(), e);
            for (std::size_t p = 0; p < dout; ++p)
                for (std::size_t q = 0; q < dout; ++q)
                    out(j * dout + p, k * dout + q) = img(p, q);
        }
    }
    return out;
}

inline double real_trace(const ComplexMatrix &m) {
    double t = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i).real();
    return t;
}

} // namespace oracle
