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

// AArch64 only. NEON is part of the base ISA there, so no runtime probe.

#include <arm_neon.h>

#include "lsched/kernels.hpp"

namespace lsched::kernels::neon {

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
    uint64x2_t grew = vdupq_n_u64(0);
    uint64x2_t hit = vdupq_n_u64(0);
    for (std::size_t i = 0; i < words; i += 2) {
        const std::uint64_t *f = frontier + i;
        uint64x2_t fc = vld1q_u64(f);
        uint64x2_t from_left = vorrq_u64(vshlq_n_u64(fc, 1), vshrq_n_u64(vld1q_u64(f - 1), 63));
        uint64x2_t from_right = vorrq_u64(vshrq_n_u64(fc, 1), vshlq_n_u64(vld1q_u64(f + 1), 63));
        uint64x2_t vertical = vorrq_u64(vld1q_u64(f - row_words), vld1q_u64(f + row_words));
        uint64x2_t nb = vorrq_u64(vorrq_u64(from_left, from_right), vertical);

        uint64x2_t p = vld1q_u64(pass + i);
        uint64x2_t vis = vld1q_u64(visited + i);
        uint64x2_t reached = vbicq_u64(vandq_u64(nb, vorrq_u64(p, vld1q_u64(stop + i))), vis);
        vst1q_u64(visited + i, vorrq_u64(vis, reached));
        vst1q_u64(layer_out + i, reached);
        vst1q_u64(frontier_out + i, vandq_u64(reached, p));
        grew = vorrq_u64(grew, reached);
        hit = vorrq_u64(hit, vandq_u64(reached, vld1q_u64(targets + i)));
    }
    bool any_grew = (vgetq_lane_u64(grew, 0) | vgetq_lane_u64(grew, 1)) != 0;
    bool any_hit = (vgetq_lane_u64(hit, 0) | vgetq_lane_u64(hit, 1)) != 0;
    return {any_grew, any_hit};
}

void due_mask(const std::int32_t *ready_at, std::int32_t cycle, std::uint64_t *out, std::size_t words) {
    const int32x4_t c = vdupq_n_s32(cycle);
    const uint32_t lane_bits[4] = {1, 2, 4, 8};
    const uint32x4_t weights = vld1q_u32(lane_bits);
    for (std::size_t w = 0; w < words; w++) {
        const std::int32_t *r = ready_at + w * 64;
        std::uint64_t bits = 0;
        for (int k = 0; k < 16; k++) {
            uint32x4_t le = vcleq_s32(vld1q_s32(r + 4 * k), c);
            std::uint64_t m = vaddvq_u32(vandq_u32(le, weights));
            bits |= m << (4 * k);
        }
        out[w] = bits;
    }
}

}  // namespace lsched::kernels::neon
