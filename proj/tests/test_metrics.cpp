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

#include <cmath>

#include "lsched/common.hpp"
#include "lsched/metrics.hpp"

using namespace lsched;

namespace {

Circuit chain(std::size_t qubits, std::size_t n) {
    Circuit c;
    c.num_qubits = qubits;
    for (std::size_t i = 0; i < n; i++) {
        c.products.push_back(PauliProduct::parse("Z0", i));
    }
    return c;
}

Circuit parallel(std::size_t qubits, std::size_t per_qubit) {
    Circuit c;
    c.num_qubits = qubits;
    for (std::size_t r = 0; r < per_qubit; r++) {
        for (std::size_t q = 0; q < qubits; q++) {
            c.products.emplace_back(std::vector<PauliTerm>{{static_cast<Qubit>(q), Pauli::Z}}, c.products.size());
        }
    }
    return c;
}

}  // namespace

TEST(metrics, reference_cells) {
    EXPECT_EQ(reference_cell_count(8), 35u);
    EXPECT_EQ(reference_cell_count(64), 221u);
    EXPECT_EQ(reference_cell_count(2), layout_cell_count(generate_layout(2, Arch::PureMagic, 1)));
}

TEST(metrics, definitions) {
    Circuit c = chain(8, 10);
    TaskGraph g(c);
    Layout layout = generate_layout(8, Arch::Bus, 2);
    ScheduleResult r;
    r.cycles = 40;
    SchedulerConfig cfg;
    Metrics m = compute_metrics(g, layout, r, cfg);
    EXPECT_EQ(m.cycles, 40);
    EXPECT_EQ(m.layers, 10u);
    EXPECT_EQ(m.products, 10u);
    EXPECT_EQ(m.n_cells, layout_cell_count(layout));
    EXPECT_EQ(m.n_ref_cells, 35u);
    EXPECT_EQ(m.volume, m.n_cells * 40);
    EXPECT_DOUBLE_EQ(m.parallel_efficiency, 0.25);
    EXPECT_DOUBLE_EQ(m.scheduling_efficiency, 35.0 * 10 / (static_cast<double>(m.n_cells) * 40));
    EXPECT_LE(m.scheduling_efficiency, m.parallel_efficiency * 35.0 / static_cast<double>(m.n_cells) + 1e-12);

    Circuit empty;
    empty.num_qubits = 8;
    TaskGraph ge(empty);
    ScheduleResult zero;
    Metrics me = compute_metrics(ge, generate_layout(8, Arch::PureMagic, 1), zero, cfg);
    EXPECT_EQ(me.volume, 0u);
    EXPECT_DOUBLE_EQ(me.parallel_efficiency, 1.0);
    EXPECT_DOUBLE_EQ(me.scheduling_efficiency, 1.0);
}

TEST(efficiency_upper_bound, layer_bound_dominates_serial_circuits) {
    SchedulerConfig cfg;
    Circuit c = chain(64, 500);
    TaskGraph g(c);
    Layout pure = generate_layout(64, Arch::PureMagic, 1);
    Layout bus = generate_layout(64, Arch::Bus, 1);
    EXPECT_DOUBLE_EQ(efficiency_upper_bound(pure, g, cfg), 1.0);
    EXPECT_DOUBLE_EQ(efficiency_upper_bound(bus, g, cfg), 221.0 / static_cast<double>(layout_cell_count(bus)));
    SchedulerConfig inst;
    inst.instant_magic = true;
    EXPECT_DOUBLE_EQ(efficiency_upper_bound(bus, TaskGraph(parallel(64, 3)), inst),
                     221.0 / static_cast<double>(layout_cell_count(bus)));
}

TEST(efficiency_upper_bound, ready_rate_limits_parallel_circuits) {
    SchedulerConfig cfg;
    double mean = expected_cultivation_cycles(cfg.cultivation);
    Layout pure = generate_layout(64, Arch::PureMagic, 1);
    Layout bus = generate_layout(64, Arch::Bus, 1);
    EXPECT_NEAR(60.0 / mean, 2.3, 0.05);
    EXPECT_NEAR(157.0 / mean, 6.0, 0.1);

    Circuit c = parallel(64, 10);
    TaskGraph g(c);
    ASSERT_EQ(g.num_layers(), 10u);
    double t_bus = 640.0 / (60.0 / mean);
    double t_pure = 640.0 / (157.0 / mean);
    double n_bus = static_cast<double>(layout_cell_count(bus));
    EXPECT_NEAR(efficiency_upper_bound(bus, g, cfg), 221.0 * 10 / (n_bus * t_bus), 1e-12);
    EXPECT_NEAR(efficiency_upper_bound(pure, g, cfg), 10 / t_pure, 1e-12);
    EXPECT_GT(efficiency_upper_bound(pure, g, cfg), efficiency_upper_bound(bus, g, cfg));
}

TEST(error_model, examples) {
    EXPECT_NEAR(error_proxy(1e-6, 100, 1000), 0.1, 1e-15);
    EXPECT_DOUBLE_EQ(logical_error_rate(1e-3, 1e-3, 17, 0.03), 0.03);
    EXPECT_NEAR(logical_error_rate(1e-4, 1e-3, 3, 1.0), 1e-2, 1e-15);
    EXPECT_THROW(logical_error_rate(0, 1e-3, 3, 1.0), ContractViolation);
    EXPECT_THROW(logical_error_rate(1e-4, 1e-3, 0, 1.0), ContractViolation);
}

TEST(metrics_json, fields_and_config_echo) {
    Circuit c = chain(8, 3);
    TaskGraph g(c);
    Layout layout = generate_layout(8, Arch::PureMagic, 1);
    SchedulerConfig cfg;
    cfg.seed = 77;
    cfg.packing = Packing::RandomOrder;
    ScheduleResult r;
    r.cycles = 6;
    Metrics m = compute_metrics(g, layout, r, cfg);
    auto j = metrics_to_json(m, layout, cfg);
    for (const char *key : {"cycles", "layers", "n_cells", "n_ref_cells", "volume", "parallel_efficiency",
                            "scheduling_efficiency", "cultivation", "seed", "config"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["seed"], 77u);
    EXPECT_TRUE(j["cultivation"]["avg_completed_cycles"].is_null());
    EXPECT_EQ(j["config"]["packing"], "random");
    EXPECT_EQ(j["config"]["arch"], "pure");
    EXPECT_EQ(j["config"]["lambda"], 0.00227);
    EXPECT_EQ(j.dump(), metrics_to_json(m, layout, cfg).dump());
    EXPECT_EQ(j.begin().key(), "cycles");

    m.cultivation.completed = 2;
    m.cultivation.completed_cycle_sum = 9;
    EXPECT_DOUBLE_EQ(metrics_to_json(m, layout, cfg)["cultivation"]["avg_completed_cycles"].get<double>(), 4.5);
}
