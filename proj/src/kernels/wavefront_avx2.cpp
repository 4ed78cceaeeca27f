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

// Built with -mavx2; only reached through the dispatch table after a CPU check.

#include <immintrin.h>

#include "lsched/kernels.hpp"

namespace lsched::kernels::avx2 {

namespace {
inline __m256i load(const std::uint64_t *p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i *>(p));
}
inline void store(std::uint64_t *p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(p), v);
}
}  // namespace

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
    __m256i grew = _mm256_setzero_si256();
    __m256i hit = _mm256_setzero_si256();
    for (std::size_t i = 0; i < words; i += 4) {
        const std::uint64_t *f = frontier + i;
        __m256i fc = load(f);
        __m256i from_left = _mm256_or_si256(_mm256_slli_epi64(fc, 1), _mm256_srli_epi64(load(f - 1), 63));
        __m256i from_right = _mm256_or_si256(_mm256_srli_epi64(fc, 1), _mm256_slli_epi64(load(f + 1), 63));
        __m256i vertical = _mm256_or_si256(load(f - row_words), load(f + row_words));
        __m256i nb = _mm256_or_si256(_mm256_or_si256(from_left, from_right), vertical);

        __m256i p = load(pass + i);
        __m256i vis = load(visited + i);
        __m256i reached = _mm256_andnot_si256(vis, _mm256_and_si256(nb, _mm256_or_si256(p, load(stop + i))));
        store(visited + i, _mm256_or_si256(vis, reached));
        store(layer_out + i, reached);
        store(frontier_out + i, _mm256_and_si256(reached, p));
        grew = _mm256_or_si256(grew, reached);
        hit = _mm256_or_si256(hit, _mm256_and_si256(reached, load(targets + i)));
    }
    return {!_mm256_testz_si256(grew, grew), !_mm256_testz_si256(hit, hit)};
}

void due_mask(const std::int32_t *ready_at, std::int32_t cycle, std::uint64_t *out, std::size_t words) {
    // v <= cycle  <=>  !(v > cycle)
    __m256i c = _mm256_set1_epi32(cycle);
    for (std::size_t w = 0; w < words; w++) {
        const std::int32_t *r = ready_at + w * 64;
        std::uint64_t bits = 0;
        for (int k = 0; k < 8; k++) {
            __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(r + 8 * k));
            __m256i gt = _mm256_cmpgt_epi32(v, c);
            auto m = static_cast<std::uint32_t>(_mm256_movemask_ps(_mm256_castsi256_ps(gt)));
            bits |= static_cast<std::uint64_t>(~m & 0xFFu) << (8 * k);
        }
        out[w] = bits;
    }
}

}  // namespace lsched::kernels::avx2
