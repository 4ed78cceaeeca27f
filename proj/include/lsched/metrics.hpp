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

#include "json.hpp"
#include "lsched/layout.hpp"
#include "lsched/scheduler.hpp"
#include "lsched/task_graph.hpp"

namespace lsched {

struct Metrics {
    int cycles = 0;
    std::size_t layers = 0;
    std::size_t products = 0;
    std::size_t n_cells = 0;
    std::size_t n_ref_cells = 0;
    std::uint64_t volume = 0;
    double parallel_efficiency = 0;
    double scheduling_efficiency = 0;
    double efficiency_upper_bound = 0;
    CultivationSummary cultivation;
};

/// Cell count of the compact (density 1) pure-magic layout for L qubits:
/// the reference footprint in the scheduling efficiency.
std::size_t reference_cell_count(std::size_t num_data_qubits);

/// Best scheduling efficiency allowed by magic supply and circuit depth.
///
/// R = M / E[cycles] states become ready per cycle, with M the cells able to
/// cultivate (every interior ancilla for pure magic, the ring for bus).
/// T_min = max(layers, products / R); the bound is N_ref * layers / (N * T_min).
/// Instant magic leaves only the depth limit.
double efficiency_upper_bound(const Layout &layout, const TaskGraph &graph, const SchedulerConfig &config);

Metrics compute_metrics(
    const TaskGraph &graph, const Layout &layout, const ScheduleResult &result, const SchedulerConfig &config);

/// Failure probability estimate P_L * N * T.
double error_proxy(double logical_error_per_cell_cycle, double n_cells, double cycles);

/// A * (eps / eps_th)^((d + 1) / 2).
double logical_error_rate(double eps, double eps_th, int distance, double prefactor);

nlohmann::ordered_json config_to_json(const Layout &layout, const SchedulerConfig &config);

/// {cycles, layers, products, n_cells, n_ref_cells, volume, parallel_efficiency,
///  scheduling_efficiency, efficiency_upper_bound, cultivation{...}, seed, config{...}}
nlohmann::ordered_json metrics_to_json(const Metrics &m, const Layout &layout, const SchedulerConfig &config);

}  // namespace lsched
