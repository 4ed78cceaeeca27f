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

#include "lsched/task_graph.hpp"

#include <algorithm>
#include <limits>

#include "lsched/common.hpp"

namespace lsched {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}

TaskGraph::TaskGraph(const Circuit &circuit)
    : circuit_(&circuit),
      preds_(circuit.products.size()),
      succs_(circuit.products.size()),
      layer_(circuit.products.size(), 0) {
    std::vector<std::size_t> last_writer(circuit.num_qubits, kNone);
    for (std::size_t n = 0; n < circuit.products.size(); n++) {
        auto &preds = preds_[n];
        for (const auto &t : circuit.products[n].terms()) {
            if (t.qubit >= last_writer.size()) {
                last_writer.resize(t.qubit + 1, kNone);
            }
            std::size_t prev = last_writer[t.qubit];
            if (prev != kNone) {
                preds.push_back(prev);
            }
            last_writer[t.qubit] = n;
        }
        std::sort(preds.begin(), preds.end());
        preds.erase(std::unique(preds.begin(), preds.end()), preds.end());

        std::size_t layer = 0;
        for (std::size_t p : preds) {
            succs_[p].push_back(n);
            layer = std::max(layer, layer_[p] + 1);
        }
        layer_[n] = layer;
        num_layers_ = std::max(num_layers_, layer + 1);
    }
}

std::vector<std::size_t> TaskGraph::layer_populations() const {
    std::vector<std::size_t> pop(num_layers_, 0);
    for (std::size_t l : layer_) {
        pop[l]++;
    }
    return pop;
}

std::vector<std::pair<std::size_t, std::size_t>> TaskGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t n = 0; n < preds_.size(); n++) {
        for (std::size_t p : preds_[n]) {
            out.emplace_back(p, n);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ParallelismStats parallelism_stats(const TaskGraph &graph) {
    ParallelismStats s;
    if (graph.size() == 0) {
        return s;
    }
    auto pop = graph.layer_populations();
    s.num_layers = pop.size();
    s.t_count = graph.size();
    s.avg_products_per_layer = static_cast<double>(graph.size()) / static_cast<double>(pop.size());
    s.max_products_per_layer = *std::max_element(pop.begin(), pop.end());
    return s;
}

std::vector<WindowStats> moving_window_stats(const TaskGraph &graph, std::size_t window) {
    if (window == 0) {
        throw ContractViolation("moving window size must be at least 1");
    }
    std::size_t layers = graph.num_layers();
    std::vector<std::size_t> pop(layers, 0);
    std::vector<std::size_t> size_sum(layers, 0);
    std::vector<std::size_t> size_max(layers, 0);
    for (std::size_t n = 0; n < graph.size(); n++) {
        std::size_t l = graph.layer(n);
        std::size_t sz = graph.product(n).size();
        pop[l]++;
        size_sum[l] += sz;
        size_max[l] = std::max(size_max[l], sz);
    }

    std::vector<WindowStats> out;
    for (std::size_t start = 0; start < layers; start += window) {
        std::size_t end = std::min(layers, start + window);
        std::size_t products = 0;
        std::size_t sizes = 0;
        WindowStats w{start, 0.0, 0, 0.0, 0};
        for (std::size_t l = start; l < end; l++) {
            products += pop[l];
            sizes += size_sum[l];
            w.max_products = std::max(w.max_products, pop[l]);
            w.max_size = std::max(w.max_size, size_max[l]);
        }
        w.avg_products = static_cast<double>(products) / static_cast<double>(end - start);
        w.avg_size = products == 0 ? 0.0 : static_cast<double>(sizes) / static_cast<double>(products);
        out.push_back(w);
    }
    return out;
}

}  // namespace lsched
