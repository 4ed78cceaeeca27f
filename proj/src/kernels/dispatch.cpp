// Copyright 2026 The lsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>

#include "lsched/common.hpp"
#include "lsched/kernels.hpp"

namespace lsched::kernels {

namespace {

constexpr KernelTable kScalar{Backend::Scalar, &scalar::expand, &scalar::due_mask};
#if defined(LSCHED_HAVE_AVX2_TU)
constexpr KernelTable kAvx2{Backend::Avx2, &avx2::expand, &avx2::due_mask};
#endif
#if defined(LSCHED_HAVE_NEON_TU)
constexpr KernelTable kNeon{Backend::Neon, &neon::expand, &neon::due_mask};
#endif

bool cpu_has(Backend b) {
    switch (b) {
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#if defined(LSCHED_HAVE_AVX2_TU)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Backend::Neon:
#if defined(LSCHED_HAVE_NEON_TU)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const KernelTable *best_table() {
    if (cpu_has(Backend::Avx2)) {
        return &table(Backend::Avx2);
    }
    if (cpu_has(Backend::Neon)) {
        return &table(Backend::Neon);
    }
    return &kScalar;
}

std::atomic<const KernelTable *> &active_slot() {
    static std::atomic<const KernelTable *> slot{best_table()};
    return slot;
}

}  // namespace

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar:
            return "scalar";
        case Backend::Avx2:
            return "avx2";
        case Backend::Neon:
            return "neon";
    }
    return "?";
}

std::vector<Backend> available_backends() {
    std::vector<Backend> out;
    for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
        if (cpu_has(b)) {
            out.push_back(b);
        }
    }
    return out;
}

const KernelTable &table(Backend b) {
    if (!cpu_has(b)) {
        throw ContractViolation("kernel backend '" + std::string(backend_name(b)) + "' is not available here");
    }
    switch (b) {
#if defined(LSCHED_HAVE_AVX2_TU)
        case Backend::Avx2:
            return kAvx2;
#endif
#if defined(LSCHED_HAVE_NEON_TU)
        case Backend::Neon:
            return kNeon;
#endif
        default:
            return kScalar;
    }
}

const KernelTable &active() {
    return *active_slot().load(std::memory_order_relaxed);
}

void set_active_backend(Backend b) {
    active_slot().store(&table(b), std::memory_order_relaxed);
}

}  // namespace lsched::kernels
