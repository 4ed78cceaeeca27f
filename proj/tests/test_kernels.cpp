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

#include <gtest/gtest.h>

#include <climits>

#include "lsched/common.hpp"
#include "lsched/grid.hpp"
#include "lsched/kernels.hpp"

using namespace lsched;
namespace k = lsched::kernels;

namespace {

Bitboard random_board(const GridShape &shape, Rng &rng, int percent) {
    Bitboard b(shape);
    for (int y = 0; y < shape.height(); y++) {
        for (int x = 0; x < shape.width(); x++) {
            if (static_cast<int>(rng.below(100)) < percent) {
                b.set(shape.bit({x, y}));
            }
        }
    }
    return b;
}

struct Step {
    Bitboard visited, layer, frontier;
    k::ExpandResult result;
};

Step run_expand(
    const k::KernelTable &t,
    const GridShape &shape,
    const Bitboard &frontier,
    const Bitboard &visited,
    const Bitboard &pass,
    const Bitboard &stop,
    const Bitboard &targets) {
    Step s{visited, Bitboard(shape), Bitboard(shape), {}};
    s.result = t.expand(
        frontier.data(),
        s.visited.data(),
        pass.data(),
        stop.data(),
        targets.data(),
        s.layer.data(),
        s.frontier.data(),
        shape.words(),
        shape.row_words());
    return s;
}

// Cell-by-cell statement of one wavefront step.
Step naive_expand(
    const GridShape &shape,
    const Bitboard &frontier,
    const Bitboard &visited,
    const Bitboard &pass,
    const Bitboard &stop,
    const Bitboard &targets) {
    Step s{visited, Bitboard(shape), Bitboard(shape), {}};
    for (int y = 0; y < shape.height(); y++) {
        for (int x = 0; x < shape.width(); x++) {
            std::size_t b = shape.bit({x, y});
            bool near = false;
            for (Cell n : {Cell{x, y - 1}, Cell{x - 1, y}, Cell{x + 1, y}, Cell{x, y + 1}}) {
                near = near || (shape.contains(n) && frontier.test(shape.bit(n)));
            }
            if (near && (pass.test(b) || stop.test(b)) && !visited.test(b)) {
                s.visited.set(b);
                s.layer.set(b);
                s.result.grew = true;
                if (pass.test(b)) {
                    s.frontier.set(b);
                }
                if (targets.test(b)) {
                    s.result.hit = true;
                }
            }
        }
    }
    return s;
}

}  // namespace

TEST(kernels, scalar_is_always_available) {
    auto backends = k::available_backends();
    ASSERT_FALSE(backends.empty());
    EXPECT_EQ(backends[0], k::Backend::Scalar);
    for (k::Backend b : backends) {
        EXPECT_EQ(k::table(b).backend, b);
    }
}

TEST(kernels, grid_padding_keeps_a_spare_bit) {
    for (int w : {1, 63, 64, 65, 127, 128, 129, 200}) {
        GridShape s(w, 3);
        EXPECT_GT(s.row_words() * 64, static_cast<std::size_t>(w));
        EXPECT_EQ(s.words() % 4, 0u);
        EXPECT_EQ(s.cell(s.bit({w - 1, 2})), (Cell{w - 1, 2}));
    }
}

TEST(kernels, expand_matches_naive_on_every_backend) {
    Rng rng(5);
    for (int w : {1, 2, 7, 13, 62, 63, 64, 65, 100, 127, 128, 129, 191}) {
        for (int h : {1, 2, 5, 9}) {
            GridShape shape(w, h);
            for (int trial = 0; trial < 6; trial++) {
                Bitboard pass = random_board(shape, rng, 70);
                Bitboard stop = random_board(shape, rng, 10);
                stop.and_not(pass);
                Bitboard frontier = random_board(shape, rng, 15);
                Bitboard visited = random_board(shape, rng, 30);
                visited |= frontier;
                Bitboard targets = random_board(shape, rng, 5);
                Step want = naive_expand(shape, frontier, visited, pass, stop, targets);
                for (k::Backend b : k::available_backends()) {
                    Step got = run_expand(k::table(b), shape, frontier, visited, pass, stop, targets);
                    std::string where = std::string(k::backend_name(b)) + " " + std::to_string(w) + "x" +
                                        std::to_string(h);
                    EXPECT_TRUE(got.visited == want.visited) << where;
                    EXPECT_TRUE(got.layer == want.layer) << where;
                    EXPECT_TRUE(got.frontier == want.frontier) << where;
                    EXPECT_EQ(got.result.grew, want.result.grew) << where;
                    EXPECT_EQ(got.result.hit, want.result.hit) << where;
                }
            }
        }
    }
}

TEST(kernels, due_mask_matches_scalar_on_every_backend) {
    Rng rng(8);
    for (std::size_t words : {4u, 8u, 12u, 32u}) {
        std::vector<std::int32_t> ready_at(words * 64);
        for (auto &v : ready_at) {
            switch (rng.below(4)) {
                case 0:
                    v = INT32_MAX;
                    break;
                case 1:
                    v = INT32_MIN;
                    break;
                default:
                    v = static_cast<std::int32_t>(rng.below(40)) - 5;
            }
        }
        for (std::int32_t cycle : {-6, -1, 0, 3, 17, 34, 100}) {
            std::vector<std::uint64_t> want(words);
            for (std::size_t b = 0; b < words * 64; b++) {
                if (ready_at[b] <= cycle) {
                    want[b / 64] |= std::uint64_t{1} << (b % 64);
                }
            }
            for (k::Backend b : k::available_backends()) {
                std::vector<std::uint64_t> got(words, 0xdeadbeef);
                k::table(b).due_mask(ready_at.data(), cycle, got.data(), words);
                EXPECT_EQ(got, want) << k::backend_name(b) << " cycle " << cycle;
            }
        }
    }
}

TEST(kernels, switching_backends) {
    const k::KernelTable &before = k::active();
    for (k::Backend b : k::available_backends()) {
        k::set_active_backend(b);
        EXPECT_EQ(k::active().backend, b);
    }
    k::set_active_backend(before.backend);
}
