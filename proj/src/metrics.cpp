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

#include "lsched/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "lsched/common.hpp"

namespace lsched {

std::size_t reference_cell_count(std::size_t num_data_qubits) {
    return generate_layout(num_data_qubits, Arch::PureMagic, 1).cell_count();
}

double efficiency_upper_bound(const Layout &layout, const TaskGraph &graph, const SchedulerConfig &config) {
    const double layers = static_cast<double>(graph.num_layers());
    const double ratio =
        static_cast<double>(reference_cell_count(layout.num_data_qubits())) / static_cast<double>(layout.cell_count());
    if (graph.size() == 0) {
        return ratio;
    }
    double t_min = layers;
    if (!config.instant_magic) {
        double m = static_cast<double>(layout.magic_capable().count());
        double rate = m / expected_cultivation_cycles(config.cultivation);
        t_min = std::max(layers, static_cast<double>(graph.size()) / rate);
    }
    return ratio * layers / t_min;
}

Metrics compute_metrics(
    const TaskGraph &graph, const Layout &layout, const ScheduleResult &result, const SchedulerConfig &config) {
    Metrics m;
    m.cycles = result.cycles;
    m.layers = graph.num_layers();
    m.products = graph.size();
    m.n_cells = layout.cell_count();
    m.n_ref_cells = reference_cell_count(layout.num_data_qubits());
    m.volume = static_cast<std::uint64_t>(m.n_cells) * static_cast<std::uint64_t>(m.cycles);
    if (m.cycles > 0) {
        m.parallel_efficiency = static_cast<double>(m.layers) / m.cycles;
        m.scheduling_efficiency = static_cast<double>(m.n_ref_cells) * static_cast<double>(m.layers) /
                                  static_cast<double>(m.volume);
    } else {
        m.parallel_efficiency = 1.0;
        m.scheduling_efficiency = static_cast<double>(m.n_ref_cells) / static_cast<double>(m.n_cells);
    }
    m.efficiency_upper_bound = efficiency_upper_bound(layout, graph, config);
    m.cultivation = result.cultivation;
    return m;
}

double error_proxy(double logical_error_per_cell_cycle, double n_cells, double cycles) {
    return logical_error_per_cell_cycle * n_cells * cycles;
}

double logical_error_rate(double eps, double eps_th, int distance, double prefactor) {
    if (!(eps > 0) || !(eps_th > 0) || distance < 1) {
        throw ContractViolation("logical_error_rate needs positive eps, eps_th and distance");
    }
    return prefactor * std::pow(eps / eps_th, (distance + 1) / 2.0);
}

nlohmann::ordered_json config_to_json(const Layout &layout, const SchedulerConfig &config) {
    nlohmann::ordered_json c;
    c["arch"] = std::string(arch_name(layout.arch()));
    c["density"] = layout.density();
    c["data_qubits"] = layout.num_data_qubits();
    c["lambda"] = config.cultivation.lambda;
    c["distance"] = config.cultivation.distance;
    c["min_cycles"] = config.cultivation.min_cycles;
    c["instant_magic"] = config.instant_magic;
    c["packing"] = std::string(packing_name(config.packing));
    c["allow_horizontal_edges"] = config.access.allow_horizontal_edges;
    c["strict_single_side"] = config.access.strict_single_side;
    c["ready_penalty"] = config.ready_penalty;
    c["bus_ring_intermediates"] = config.bus_ring_intermediates;
    return c;
}

nlohmann::ordered_json metrics_to_json(const Metrics &m, const Layout &layout, const SchedulerConfig &config) {
    nlohmann::ordered_json j;
    j["cycles"] = m.cycles;
    j["layers"] = m.layers;
    j["products"] = m.products;
    j["n_cells"] = m.n_cells;
    j["n_ref_cells"] = m.n_ref_cells;
    j["volume"] = m.volume;
    j["parallel_efficiency"] = m.parallel_efficiency;
    j["scheduling_efficiency"] = m.scheduling_efficiency;
    j["efficiency_upper_bound"] = m.efficiency_upper_bound;
    nlohmann::ordered_json cult;
    cult["completed"] = m.cultivation.completed;
    cult["terminated"] = m.cultivation.terminated;
    if (auto avg = m.cultivation.avg_completed_cycles()) {
        cult["avg_completed_cycles"] = *avg;
    } else {
        cult["avg_completed_cycles"] = nullptr;
    }
    cult["ready_used_for_routing"] = m.cultivation.ready_used_for_routing;
    j["cultivation"] = std::move(cult);
    j["seed"] = config.seed;
    j["config"] = config_to_json(layout, config);
    return j;
}

}  // namespace lsched
