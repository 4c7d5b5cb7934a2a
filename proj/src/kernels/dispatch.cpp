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

#include "condchoi/kernels.hpp"

#include <atomic>

namespace condchoi::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(CONDCHOI_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

std::atomic<const KernelTable *> &current() noexcept {
    static std::atomic<const KernelTable *> ptr{&table(detect())};
    return ptr;
}

} // namespace

std::string_view to_string(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar:
        return "scalar";
    case Isa::Avx2:
        return "avx2";
    case Isa::Neon:
        return "neon";
    }
    return "unknown";
}

bool available(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar:
        return true;
    case Isa::Avx2:
        return cpu_has_avx2();
    case Isa::Neon:
#if defined(CONDCHOI_HAVE_NEON)
        return true;
#else
        return false;
#endif
    }
    return false;
}

const KernelTable &table(Isa isa) noexcept {
    if (!available(isa)) {
        return scalar::kTable;
    }
    switch (isa) {
#if defined(CONDCHOI_HAVE_AVX2)
    case Isa::Avx2:
        return avx2::kTable;
#endif
#if defined(CONDCHOI_HAVE_NEON)
    case Isa::Neon:
        return neon::kTable;
#endif
    default:
        return scalar::kTable;
    }
}

Isa detect() noexcept {
    if (available(Isa::Avx2)) {
        return Isa::Avx2;
    }
    if (available(Isa::Neon)) {
        return Isa::Neon;
    }
    return Isa::Scalar;
}

const KernelTable &active() noexcept {
    return *current().load(std::memory_order_acquire);
}

bool select(Isa isa) noexcept {
    if (!available(isa)) {
        return false;
    }
    current().store(&table(isa), std::memory_order_release);
    return true;
}

} // namespace condchoi::kernels
