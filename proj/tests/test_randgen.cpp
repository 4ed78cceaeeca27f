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

#include "lsched/common.hpp"
#include "lsched/randgen.hpp"
#include "lsched/task_graph.hpp"

using namespace lsched;

namespace {

RandGenParams params(std::size_t q, std::size_t n, double size_mean, std::size_t spread, std::uint64_t seed) {
    RandGenParams p;
    p.num_qubits = q;
    p.num_products = n;
    p.size_mean = size_mean;
    p.spread = spread;
    p.seed = seed;
    return p;
}

}  // namespace

TEST(generate_random_circuit, valid_and_deterministic) {
    for (std::uint64_t seed = 0; seed < 5; seed++) {
        RandGenParams p = params(20, 500, 3.0, 7, seed);
        Circuit a = generate_random_circuit(p);
        EXPECT_NO_THROW(a.validate());
        EXPECT_EQ(a.products.size(), 500u);
        EXPECT_EQ(circuit_to_json(a), circuit_to_json(generate_random_circuit(p)));
        for (const PauliProduct &prod : a.products) {
            EXPECT_LE(prod.size(), 7u);
            EXPECT_LT(prod.max_qubit() - prod.terms().front().qubit, 7u);
        }
    }
    EXPECT_NE(circuit_to_json(generate_random_circuit(params(20, 50, 2.0, 20, 1))),
              circuit_to_json(generate_random_circuit(params(20, 50, 2.0, 20, 2))));
}

TEST(generate_random_circuit, extremes) {
    Circuit wide = generate_random_circuit(params(64, 20000, 1.0, 1, 3));
    for (const PauliProduct &p : wide.products) {
        ASSERT_EQ(p.size(), 1u);
    }
    EXPECT_GT(measured_parallelism(wide), 48.0);

    Circuit serial = generate_random_circuit(params(64, 2000, 64.0, 64, 3));
    EXPECT_LT(measured_parallelism(serial), 1.3);
    EXPECT_GE(measured_parallelism(serial), 1.0);
}

TEST(generate_random_circuit, size_mean_tracks_the_request) {
    for (double mean : {1.5, 3.0, 6.0}) {
        Circuit c = generate_random_circuit(params(64, 20000, mean, 64, 11));
        double total = 0;
        for (const PauliProduct &p : c.products) {
            total += static_cast<double>(p.size());
        }
        EXPECT_NEAR(total / 20000.0, mean, 0.05 * mean);
    }
}

TEST(generate_random_circuit, parallelism_falls_with_size) {
    std::vector<double> means{1.0, 1.5, 2.5, 4.0, 8.0, 16.0};
    std::vector<double> prev;
    for (double mean : means) {
        std::vector<double> got;
        for (std::uint64_t seed = 0; seed < 5; seed++) {
            got.push_back(measured_parallelism(generate_random_circuit(params(64, 3000, mean, 64, seed))));
        }
        std::sort(got.begin(), got.end());
        if (!prev.empty()) {
            EXPECT_LT(got[2], prev[2]) << "size_mean " << mean;
        }
        prev = got;
    }
}

TEST(generate_random_circuit, rejects_bad_params) {
    EXPECT_THROW(generate_random_circuit(params(0, 10, 1, 1, 0)), InputError);
    EXPECT_THROW(generate_random_circuit(params(8, 10, 0.5, 8, 0)), InputError);
    EXPECT_THROW(generate_random_circuit(params(8, 10, 9, 8, 0)), InputError);
    EXPECT_THROW(generate_random_circuit(params(8, 10, 2, 9, 0)), InputError);
    EXPECT_THROW(generate_random_circuit(params(8, 10, 2, 0, 0)), InputError);
    EXPECT_TRUE(generate_random_circuit(params(8, 0, 2, 8, 0)).products.empty());
}

TEST(calibrate_preset, presets_land_within_five_percent) {
    for (Preset preset : {Preset::Low, Preset::Medium, Preset::High}) {
        double target = preset_target(preset);
        RandGenParams p = calibrate_preset(target, 64, 1);
        EXPECT_EQ(p.spread, 64u);
        EXPECT_EQ(p.num_products, 20000u);
        double got = measured_parallelism(generate_random_circuit(p));
        EXPECT_NEAR(got, target, 0.05 * target) << preset_name(preset);
    }
    RandGenParams serial = calibrate_preset(1.0, 64, 1, 2000);
    EXPECT_DOUBLE_EQ(serial.size_mean, 64.0);
}

TEST(calibrate_preset, infeasible_targets) {
    EXPECT_THROW(calibrate_preset(65, 64, 1, 1000), InputError);
    EXPECT_THROW(calibrate_preset(0.5, 64, 1, 1000), InputError);
    // Every product is a single qubit at best, so 8 qubits and 4000 products
    // cannot average 8 products per layer.
    EXPECT_THROW(calibrate_preset(8.0, 8, 1, 4000), InputError);
}

TEST(presets, names) {
    EXPECT_EQ(parse_preset("low"), Preset::Low);
    EXPECT_EQ(parse_preset("medium"), Preset::Medium);
    EXPECT_EQ(parse_preset("high"), Preset::High);
    EXPECT_THROW(parse_preset("max"), InputError);
    EXPECT_DOUBLE_EQ(preset_target(Preset::High), 25.13);
}
