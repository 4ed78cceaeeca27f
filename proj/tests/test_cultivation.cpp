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

#include <algorithm>
#include <cmath>
#include <map>

#include "lsched/common.hpp"
#include "lsched/cultivation.hpp"
#include "lsched/kernels.hpp"

using namespace lsched;

namespace {

std::vector<std::size_t> bits_of(const Bitboard &b) {
    std::vector<std::size_t> out;
    b.for_each([&](std::size_t bit) {
        out.push_back(bit);
    });
    return out;
}

}  // namespace

TEST(sample_cultivation_cycles, inverse_cdf_examples) {
    CultivationParams p;
    EXPECT_EQ(cultivation_cycles_from_uniform(0.5, p), 18);
    EXPECT_NEAR(-std::log(0.5) / p.lambda, 305.35, 0.05);
    EXPECT_EQ(cultivation_cycles_from_uniform(1.0 - 1e-15, p), 1);
    EXPECT_EQ(cultivation_cycles_from_uniform(std::exp(-p.lambda * 17 * 2.5), p), 3);
    EXPECT_GE(cultivation_cycles_from_uniform(1e-300, p), 1);
    CultivationParams floor5{0.00227, 17, 5};
    EXPECT_EQ(cultivation_cycles_from_uniform(0.99, floor5), 5);
}

TEST(sample_cultivation_cycles, distribution) {
    CultivationParams p;
    Rng rng(123);
    const int n = 400000;
    std::vector<int> v(n);
    double sum = 0;
    int small = 0;
    for (int &x : v) {
        x = sample_cultivation_cycles(rng, p);
        sum += x;
        small += x <= 5;
        ASSERT_GE(x, 1);
    }
    std::nth_element(v.begin(), v.begin() + n / 2, v.end());
    double mean = sum / n;
    EXPECT_GE(mean, 25.3);
    EXPECT_LE(mean, 26.6);
    EXPECT_NEAR(mean, expected_cultivation_cycles(p), 0.25);
    EXPECT_TRUE(v[n / 2] == 18 || v[n / 2] == 19) << v[n / 2];
    double frac = static_cast<double>(small) / n;
    EXPECT_GE(frac, 0.13);
    EXPECT_LE(frac, 0.19);
}

TEST(sample_cultivation_cycles, analytic_mean_and_inverse) {
    CultivationParams p;
    EXPECT_NEAR(expected_cultivation_cycles(p), 26.4167, 1e-3);
    for (double mean : {2.0, 8.0, 26.0, 64.0}) {
        CultivationParams q{lambda_for_mean_cycles(mean, 17), 17, 1};
        EXPECT_NEAR(expected_cultivation_cycles(q), mean, 1e-9);
    }
    EXPECT_THROW(lambda_for_mean_cycles(1.0, 17), ContractViolation);
    EXPECT_THROW((CultivationParams{0, 17, 1}.validate()), ContractViolation);
    EXPECT_THROW((CultivationParams{0.1, 0, 1}.validate()), ContractViolation);
    EXPECT_THROW((CultivationParams{0.1, 17, 0}.validate()), ContractViolation);
}

TEST(cultivation_state, advance_examples) {
    GridShape shape(4, 1);
    Bitboard cells(shape);
    std::size_t a = shape.bit({0, 0});
    std::size_t b = shape.bit({2, 0});
    cells.set(a);
    cells.set(b);
    Rng rng(1);
    CultivationState st(shape, cells, {}, true, rng);
    EXPECT_EQ(bits_of(st.advance(0)), (std::vector<std::size_t>{a, b}));
    EXPECT_EQ(st.summary().completed, 2u);

    st.restart(a, 4, rng);
    EXPECT_EQ(st.summary().terminated, 0u);
    EXPECT_FALSE(st.is_ready(a));
    EXPECT_EQ(st.next_completion(), 5);
    EXPECT_EQ(bits_of(st.advance(4)), (std::vector<std::size_t>{b}));
    EXPECT_EQ(bits_of(st.advance(5)), (std::vector<std::size_t>{a, b}));
    EXPECT_EQ(st.summary().completed, 3u);
    EXPECT_FALSE(st.any_cultivating());
    EXPECT_EQ(st.next_completion(), std::nullopt);

    st.restart(a, 6, rng);
    st.restart(b, 2 + 6, rng);
    EXPECT_EQ(bits_of(st.advance(7)), (std::vector<std::size_t>{a}));
    EXPECT_EQ(bits_of(st.advance(9)), (std::vector<std::size_t>{a, b}));
    EXPECT_THROW(st.advance(8), ContractViolation);
}

TEST(cultivation_state, contracts) {
    GridShape shape(3, 3);
    Bitboard cells(shape);
    cells.set(shape.bit({1, 1}));
    Rng rng(2);
    CultivationState st(shape, cells, {}, true, rng);
    EXPECT_THROW(st.restart(shape.bit({0, 0}), 0, rng), ContractViolation);
    EXPECT_THROW(st.destroy_ready(shape.bit({1, 1}), 0, rng), ContractViolation);
    st.advance(0);
    st.destroy_ready(shape.bit({1, 1}), 0, rng);
    EXPECT_EQ(st.summary().ready_used_for_routing, 1u);
    EXPECT_EQ(st.summary().terminated, 0u);
    Rng r2(3);
    EXPECT_THROW(CultivationState(shape, cells, CultivationParams{-1, 17, 1}, false, r2), ContractViolation);
}

TEST(cultivation_state, terminations_and_average) {
    GridShape shape(1, 1);
    Bitboard cells(shape);
    cells.set(0);
    Rng rng(4);
    CultivationState st(shape, cells, {}, false, rng);
    ASSERT_TRUE(st.any_cultivating());
    int ready_at = *st.next_completion();
    st.restart(0, 0, rng);
    st.restart(0, 1, rng);
    st.restart(0, 2, rng);
    EXPECT_EQ(st.summary().terminated, 3u);
    EXPECT_EQ(st.avg_completed_cultivation(), std::nullopt);
    int done = *st.next_completion();
    st.advance(done);
    ASSERT_EQ(st.summary().completed, 1u);
    EXPECT_DOUBLE_EQ(*st.avg_completed_cultivation(), done - 2);
    (void)ready_at;

    CultivationSummary s;
    s.completed = 2;
    s.completed_cycle_sum = 40;
    EXPECT_DOUBLE_EQ(*s.avg_completed_cycles(), 20.0);
    CultivationSummary t;
    t.terminated = 3;
    t.completed = 1;
    t.completed_cycle_sum = 4;
    EXPECT_DOUBLE_EQ(*t.avg_completed_cycles(), 4.0);
}

TEST(cultivation_state, interruption_bias) {
    GridShape shape(16, 16);
    Bitboard cells(shape);
    for (int y = 0; y < 16; y++) {
        for (int x = 0; x < 16; x++) {
            cells.set(shape.bit({x, y}));
        }
    }
    for (int k : {1, 3, 10, 20}) {
        Rng rng(static_cast<std::uint64_t>(k));
        CultivationState st(shape, cells, {}, false, rng);
        std::map<std::size_t, int> started;
        cells.for_each([&](std::size_t b) {
            started[b] = -1;
        });
        for (int c = 0; c < 2000; c++) {
            Bitboard ready = st.advance(c);
            cells.for_each([&](std::size_t b) {
                if (ready.test(b)) {
                    st.restart(b, c, rng);
                    started[b] = c;
                } else if (c - started[b] >= k) {
                    st.restart(b, c, rng);
                    started[b] = c;
                }
            });
        }
        ASSERT_TRUE(st.avg_completed_cultivation().has_value());
        EXPECT_LE(*st.avg_completed_cultivation(), k) << "k=" << k;
        EXPECT_GT(st.summary().terminated, 0u);
    }
}

TEST(cultivation_state, idle_consumption_average_near_mean) {
    GridShape shape(30, 2);
    Bitboard cells(shape);
    for (int x = 0; x < 30; x++) {
        cells.set(shape.bit({x, 0}));
        cells.set(shape.bit({x, 1}));
    }
    Rng rng(9);
    CultivationState st(shape, cells, {}, false, rng);
    for (int c = 0; c < 20000; c++) {
        Bitboard ready = st.advance(c);
        ready.for_each([&](std::size_t b) {
            st.restart(b, c, rng);
        });
    }
    double avg = *st.avg_completed_cultivation();
    EXPECT_GT(avg, 25.0);
    EXPECT_LT(avg, 27.5);
    EXPECT_EQ(st.summary().terminated, 0u);
}

TEST(cultivation_state, deterministic_across_runs_and_backends) {
    GridShape shape(70, 3);
    Bitboard cells(shape);
    Rng pick(77);
    for (int y = 0; y < 3; y++) {
        for (int x = 0; x < 70; x++) {
            if (pick.below(3) != 0) {
                cells.set(shape.bit({x, y}));
            }
        }
    }
    auto trace = [&]() {
        Rng rng(31337);
        CultivationState st(shape, cells, {}, false, rng);
        std::vector<std::size_t> log;
        for (int c = 0; c < 300; c++) {
            Bitboard ready = st.advance(c);
            std::size_t n = 0;
            ready.for_each([&](std::size_t b) {
                log.push_back(b);
                if (n++ % 2 == 0) {
                    st.restart(b, c, rng);
                }
            });
            log.push_back(SIZE_MAX);
        }
        return log;
    };
    const kernels::KernelTable &before = kernels::active();
    std::vector<std::size_t> reference;
    for (kernels::Backend b : kernels::available_backends()) {
        kernels::set_active_backend(b);
        auto t1 = trace();
        auto t2 = trace();
        EXPECT_EQ(t1, t2);
        if (reference.empty()) {
            reference = t1;
        }
        EXPECT_EQ(t1, reference) << kernels::backend_name(b);
    }
    kernels::set_active_backend(before.backend);
}
