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

// NEON kernels for AArch64. One float64x2_t holds a single complex value.

#include "condchoi/kernels.hpp"

#include <algorithm>
#include <arm_neon.h>

namespace condchoi::kernels::neon {
namespace {

inline float64x2_t cmul(float64x2_t a, float64x2_t x) {
    // [ar*xr - ai*xi, ar*xi + ai*xr]
    const float64x2_t ar = vdupq_laneq_f64(a, 0);
    const float64x2_t ai = vdupq_laneq_f64(a, 1);
    const float64x2_t xswap = vextq_f64(x, x, 1);
    const float64x2_t sign = {-1.0, 1.0};
    return vfmaq_f64(vmulq_f64(ar, x), vmulq_f64(ai, sign), xswap);
}

void axpy(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    const float64x2_t a = vld1q_f64(reinterpret_cast<const double *>(&alpha));
    const auto *xp = reinterpret_cast<const double *>(x);
    auto *yp = reinterpret_cast<double *>(y);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t xv = vld1q_f64(xp + 2 * i);
        vst1q_f64(yp + 2 * i, vaddq_f64(vld1q_f64(yp + 2 * i), cmul(a, xv)));
    }
}

void scale(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    const float64x2_t a = vld1q_f64(reinterpret_cast<const double *>(&alpha));
    const auto *xp = reinterpret_cast<const double *>(x);
    auto *yp = reinterpret_cast<double *>(y);
    for (std::size_t i = 0; i < n; ++i) {
        vst1q_f64(yp + 2 * i, cmul(a, vld1q_f64(xp + 2 * i)));
    }
}

cplx dotu(const cplx *x, const cplx *y, std::size_t n) {
    const auto *xp = reinterpret_cast<const double *>(x);
    const auto *yp = reinterpret_cast<const double *>(y);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        acc = vaddq_f64(acc, cmul(vld1q_f64(xp + 2 * i), vld1q_f64(yp + 2 * i)));
    }
    return {vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1)};
}

void gemm(const cplx *a, const cplx *b, cplx *c, std::size_t m,
          std::size_t k, std::size_t n) {
    std::fill(c, c + m * n, cplx{});
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t p = 0; p < k; ++p) {
            const cplx aip = a[i * k + p];
            if (aip != cplx{}) {
                axpy(aip, b + p * n, c + i * n, n);
            }
        }
    }
}

} // namespace

const KernelTable kTable{Isa::Neon, &gemm, &dotu, &axpy, &scale};

} // namespace condchoi::kernels::neon
