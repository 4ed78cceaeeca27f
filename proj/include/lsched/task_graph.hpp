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
#include <utility>
#include <vector>

#include "lsched/pauli.hpp"

namespace lsched {

/// Dependency DAG over the products of a circuit.
///
/// Any shared qubit orders two products. Only the per-qubit most recent
/// earlier product gets an edge, so the graph is sparse; longest-path layers
/// are the same as for the full qubit-sharing relation.
class TaskGraph {
   public:
    explicit TaskGraph(const Circuit &circuit);

    std::size_t size() const {
        return layer_.size();
    }
    const Circuit &circuit() const {
        return *circuit_;
    }
    const PauliProduct &product(std::size_t node) const {
        return circuit_->products[node];
    }
    const std::vector<std::size_t> &predecessors(std::size_t node) const {
        return preds_[node];
    }
    const std::vector<std::size_t> &successors(std::size_t node) const {
        return succs_[node];
    }
    std::size_t layer(std::size_t node) const {
        return layer_[node];
    }
    std::size_t num_layers() const {
        return num_layers_;
    }
    /// Number of products in each layer.
    std::vector<std::size_t> layer_populations() const;
    /// All (predecessor, successor) pairs, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

   private:
    const Circuit *circuit_;
    std::vector<std::vector<std::size_t>> preds_;
    std::vector<std::vector<std::size_t>> succs_;
    std::vector<std::size_t> layer_;
    std::size_t num_layers_ = 0;
};

/// Builds the task graph. The circuit must outlive the graph.
inline TaskGraph build_task_graph(const Circuit &circuit) {
    return TaskGraph(circuit);
}

struct ParallelismStats {
    std::size_t num_layers = 0;
    double avg_products_per_layer = 0;
    std::size_t max_products_per_layer = 0;
    std::size_t t_count = 0;
};

ParallelismStats parallelism_stats(const TaskGraph &graph);

struct WindowStats {
    std::size_t layer_index;  // first layer in the window
    double avg_products;
    std::size_t max_products;
    double avg_size;
    std::size_t max_size;
};

/// Non-overlapping windows of `window` layers (the last may be short). A
/// window larger than the layer count yields a single record.
std::vector<WindowStats> moving_window_stats(const TaskGraph &graph, std::size_t window);

}  // namespace lsched
