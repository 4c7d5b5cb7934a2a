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
 * Dense complex inner loops. Each routine exists as a scalar reference and,
 * where the target supports it, an AVX2+FMA or NEON variant. The variant is
 * picked once at startup from CPUID; tests may pin a specific one.
 *
 * All buffers hold interleaved std::complex<double> in row-major order.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace condchoi::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
    Isa isa;
    /// c[m x n] = a[m x k] * b[k x n]; c is overwritten.
    void (*gemm)(const cplx *a, const cplx *b, cplx *c, std::size_t m,
                 std::size_t k, std::size_t n);
    /// sum_i x[i] * y[i] (no conjugation).
    cplx (*dotu)(const cplx *x, const cplx *y, std::size_t n);
    /// y += alpha * x
    void (*axpy)(cplx alpha, const cplx *x, cplx *y, std::size_t n);
    /// y = alpha * x
    void (*scale)(cplx alpha, const cplx *x, cplx *y, std::size_t n);
};

/// Kernels currently in use.
const KernelTable &active() noexcept;

/// Is the variant compiled in and supported by this CPU?
bool available(Isa isa) noexcept;

/// Table for a specific variant. Falls back to scalar when unavailable.
const KernelTable &table(Isa isa) noexcept;

/// Pin the active variant; returns false (and changes nothing) when the
/// variant is unavailable.
bool select(Isa isa) noexcept;

/// Best variant for this CPU.
Isa detect() noexcept;

namespace scalar {
extern const KernelTable kTable;
}
#if defined(CONDCHOI_HAVE_AVX2)
namespace avx2 {
extern const KernelTable kTable;
}
#endif
#if defined(CONDCHOI_HAVE_NEON)
namespace neon {
extern const KernelTable kTable;
}
#endif

} // namespace condchoi::kernels
