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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace lsched::kernels {

// Data-parallel inner loops of the router and the cultivation model. Every
// backend must produce bit-identical output; the scalar one is the reference.

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend b);

struct ExpandResult {
    bool grew = false;  // some cell was newly reached
    bool hit = false;   // some newly reached cell is a target
};

/// One breadth-first wavefront step over a grid bitboard (see GridShape).
///
///   reached      = neighbours(frontier) & (pass | stop) & ~visited
///   visited     |= reached
///   layer_out    = reached
///   frontier_out = reached & pass
///
/// `stop` cells can be reached but never expand further. All pointers are
/// `words` long (a multiple of 4); `frontier` must be readable `row_words + 1`
/// words before and after its range (Bitboard guards provide this).
using ExpandFn = ExpandResult (*)(
    const std::uint64_t *frontier,
    std::uint64_t *visited,
    const std::uint64_t *pass,
    const std::uint64_t *stop,
    const std::uint64_t *targets,
    std::uint64_t *layer_out,
    std::uint64_t *frontier_out,
    std::size_t words,
    std::size_t row_words);

/// out bit b = ready_at[b] <= cycle, for b < words * 64.
using DueFn = void (*)(const std::int32_t *ready_at, std::int32_t cycle, std::uint64_t *out, std::size_t words);

struct KernelTable {
    Backend backend;
    ExpandFn expand;
    DueFn due_mask;
};

/// Backends usable on this machine, scalar first.
std::vector<Backend> available_backends();

/// Kernel table for a specific backend; throws ContractViolation if unavailable.
const KernelTable &table(Backend b);

/// Currently selected table (defaults to the widest available backend).
const KernelTable &active();
void set_active_backend(Backend b);

namespace scalar {
ExpandResult expand(
    const std::uint64_t *frontier,
    std::uint64_t *visited,
    const std::uint64_t *pass,
    const std::uint64_t *stop,
    const std::uint64_t *targets,
    std::uint64_t *layer_out,
    std::uint64_t *frontier_out,
    std::size_t words,
    std::size_t row_words);
void due_mask(const std::int32_t *ready_at, std::int32_t cycle, std::uint64_t *out, std::size_t words);
}  // namespace scalar

namespace avx2 {
ExpandResult expand(
    const std::uint64_t *frontier,
    std::uint64_t *visited,
    const std::uint64_t *pass,
    const std::uint64_t *stop,
    const std::uint64_t *targets,
    std::uint64_t *layer_out,
    std::uint64_t *frontier_out,
    std::size_t words,
    std::size_t row_words);
void due_mask(const std::int32_t *ready_at, std::int32_t cycle, std::uint64_t *out, std::size_t words);
}  // namespace avx2

namespace neon {
ExpandResult expand(
    const std::uint64_t *frontier,
    std::uint64_t *visited,
    const std::uint64_t *pass,
    const std::uint64_t *stop,
    const std::uint64_t *targets,
    std::uint64_t *layer_out,
    std::uint64_t *frontier_out,
    std::size_t words,
    std::size_t row_words);
void due_mask(const std::int32_t *ready_at, std::int32_t cycle, std::uint64_t *out, std::size_t words);
}  // namespace neon

}  // namespace lsched::kernels
