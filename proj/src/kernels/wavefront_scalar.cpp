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

#include <cstddef>

#include "lsched/kernels.hpp"

namespace lsched::kernels::scalar {

ExpandResult expand(
    const std::uint64_t *frontier,
    std::uint64_t *visited,
    const std::uint64_t *pass,
    const std::uint64_t *stop,
    const std::uint64_t *targets,
    std::uint64_t *layer_out,
    std::uint64_t *frontier_out,
    std::size_t words,
    std::size_t row_words) {
    std::uint64_t grew = 0;
    std::uint64_t hit = 0;
    const auto rw = static_cast<std::ptrdiff_t>(row_words);
    for (std::size_t i = 0; i < words; i++) {
        const std::uint64_t *fp = frontier + i;
        std::uint64_t f = *fp;
        std::uint64_t nb = (f << 1) | (fp[-1] >> 63)  // from the left neighbour
                           | (f >> 1) | (fp[1] << 63)  // from the right neighbour
                           | fp[-rw] | fp[rw];
        std::uint64_t reached = nb & (pass[i] | stop[i]) & ~visited[i];
        visited[i] |= reached;
        layer_out[i] = reached;
        frontier_out[i] = reached & pass[i];
        grew |= reached;
        hit |= reached & targets[i];
    }
    return {grew != 0, hit != 0};
}

void due_mask(const std::int32_t *ready_at, std::int32_t cycle, std::uint64_t *out, std::size_t words) {
    for (std::size_t w = 0; w < words; w++) {
        std::uint64_t v = 0;
        const std::int32_t *r = ready_at + w * 64;
        for (int b = 0; b < 64; b++) {
            v |= static_cast<std::uint64_t>(r[b] <= cycle) << b;
        }
        out[w] = v;
    }
}

}  // namespace lsched::kernels::scalar
