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

// AVX2+FMA kernels. This translation unit is built with -mavx2 -mfma and
// must only be entered after dispatch has confirmed CPU support.
//
// Layout: one __m256d holds two complex numbers [re0, im0, re1, im1].

#include "condchoi/kernels.hpp"

#include <algorithm>
#include <immintrin.h>

namespace condchoi::kernels::avx2 {
namespace {

// alpha * x for two packed complex values.
inline __m256d cmul_broadcast(__m256d ar, __m256d ai, __m256d x) {
    const __m256d xswap = _mm256_permute_pd(x, 0b0101);
    // even lanes: xr*ar - xi*ai, odd lanes: xi*ar + xr*ai
    return _mm256_fmaddsub_pd(x, ar, _mm256_mul_pd(xswap, ai));
}

void axpy(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    const auto *xp = reinterpret_cast<const double *>(x);
    auto *yp = reinterpret_cast<double *>(y);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x0 = _mm256_loadu_pd(xp + 2 * i);
        __m256d x1 = _mm256_loadu_pd(xp + 2 * i + 4);
        __m256d y0 = _mm256_loadu_pd(yp + 2 * i);
        __m256d y1 = _mm256_loadu_pd(yp + 2 * i + 4);
        y0 = _mm256_add_pd(y0, cmul_broadcast(ar, ai, x0));
        y1 = _mm256_add_pd(y1, cmul_broadcast(ar, ai, x1));
        _mm256_storeu_pd(yp + 2 * i, y0);
        _mm256_storeu_pd(yp + 2 * i + 4, y1);
    }
    for (; i + 2 <= n; i += 2) {
        __m256d x0 = _mm256_loadu_pd(xp + 2 * i);
        __m256d y0 = _mm256_loadu_pd(yp + 2 * i);
        _mm256_storeu_pd(yp + 2 * i,
                         _mm256_add_pd(y0, cmul_broadcast(ar, ai, x0)));
    }
    if (i < n) {
        const __m128d ar1 = _mm_set1_pd(alpha.real());
        const __m128d ai1 = _mm_set1_pd(alpha.imag());
        const __m128d x0 = _mm_loadu_pd(xp + 2 * i);
        const __m128d y0 = _mm_loadu_pd(yp + 2 * i);
        const __m128d xs = _mm_permute_pd(x0, 0b01);
        const __m128d prod = _mm_fmaddsub_pd(x0, ar1, _mm_mul_pd(xs, ai1));
        _mm_storeu_pd(yp + 2 * i, _mm_add_pd(y0, prod));
    }
}

void scale(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    const auto *xp = reinterpret_cast<const double *>(x);
    auto *yp = reinterpret_cast<double *>(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d x0 = _mm256_loadu_pd(xp + 2 * i);
        _mm256_storeu_pd(yp + 2 * i, cmul_broadcast(ar, ai, x0));
    }
    if (i < n) {
        const __m128d ar1 = _mm_set1_pd(alpha.real());
        const __m128d ai1 = _mm_set1_pd(alpha.imag());
        const __m128d x0 = _mm_loadu_pd(xp + 2 * i);
        const __m128d xs = _mm_permute_pd(x0, 0b01);
        _mm_storeu_pd(yp + 2 * i,
                      _mm_fmaddsub_pd(x0, ar1, _mm_mul_pd(xs, ai1)));
    }
}

cplx dotu(const cplx *x, const cplx *y, std::size_t n) {
    const auto *xp = reinterpret_cast<const double *>(x);
    const auto *yp = reinterpret_cast<const double *>(y);
    // same[k] accumulates [xr*yr, xi*yi], cross[k] accumulates [xr*yi, xi*yr]
    __m256d same = _mm256_setzero_pd();
    __m256d cross = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        same = _mm256_fmadd_pd(xv, yv, same);
        cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
    }
    alignas(32) double s[4];
    alignas(32) double c[4];
    _mm256_store_pd(s, same);
    _mm256_store_pd(c, cross);
    double re = (s[0] + s[2]) - (s[1] + s[3]);
    double im = (c[0] + c[2]) + (c[1] + c[3]);
    for (; i < n; ++i) {
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

const KernelTable kTable{Isa::Avx2, &gemm, &dotu, &axpy, &scale};

} // namespace condchoi::kernels::avx2
