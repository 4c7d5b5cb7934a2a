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

// Reference kernels. Complex products are spelled out on re/im parts so
// the compiler does not route them through the C99 Annex G helpers.

#include "condchoi/kernels.hpp"

#include <algorithm>

namespace condchoi::kernels::scalar {
namespace {

inline cplx mul(cplx a, cplx b) {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

void axpy(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += mul(alpha, x[i]);
    }
}

void scale(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = mul(alpha, x[i]);
    }
}

cplx dotu(const cplx *x, const cplx *y, std::size_t n) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
    }
    return {re, im};
}

void gemm(const cplx *a, const cplx *b, cplx *c, std::size_t m,
          std::size_t k, std::size_t n) {
    std::fill(c, c + m * n, cplx{});
    for (std::size_t i = 0; i < m; ++i) {
        cplx *crow = c + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const cplx aip = a[i * k + p];
            if (aip == cplx{}) {
                continue;
            }
            axpy(aip, b + p * n, crow, n);
        }
    }
}

} // namespace

const KernelTable kTable{Isa::Scalar, &gemm, &dotu, &axpy, &scale};

} // namespace condchoi::kernels::scalar
