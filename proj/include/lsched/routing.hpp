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
#include <optional>
#include <vector>

#include "lsched/grid.hpp"

namespace lsched {

/// One cycle's view of the grid, as seen by the router.
///
/// `pass` cells can be routed through. `stop` cells can end a path but never
/// continue one (ready ring cells of the bus architecture). `ready` marks
/// consumable magic and must lie inside pass | stop.
struct RoutingMasks {
    explicit RoutingMasks(const GridShape &shape) : pass(shape), stop(shape), ready(shape) {
    }
    Bitboard pass;
    Bitboard stop;
    Bitboard ready;
};

struct SteinerTree {
    std::vector<Cell> cells;  // row-major order, magic cell included
    Cell magic_cell;
    int weight = 0;  // cells.size()
};

/// Shortest-path-heuristic Steiner search, reusable across calls.
///
/// Terminals are the mandatory cells plus one virtual terminal joined at zero
/// cost to every ready cell. Growth starts at the first mandatory cell in
/// row-major order and repeatedly attaches the nearest unconnected terminal
/// (ties: lowest row-major cell) along a shortest path. The path is recovered
/// by walking back one distance layer at a time, preferring the neighbour
/// above, then left, right, below. The magic cell is the first ready cell of
/// the final tree in row-major order; any other ready cell in the tree is
/// used as plain routing.
///
/// With `ready_penalty` > 0, entering a ready cell costs 1 + ready_penalty
/// instead of 1 and a scalar Dijkstra replaces the bit-parallel wavefront.
/// Both searches produce the same tree when the penalty is 0.
class SteinerSolver {
   public:
    explicit SteinerSolver(const GridShape &shape);

    std::optional<SteinerTree> solve(
        const std::vector<Cell> &mandatory, const RoutingMasks &masks, int ready_penalty = 0);

    const GridShape &shape() const {
        return shape_;
    }

    /// Forces the Dijkstra search even without a penalty.
    void set_force_dijkstra(bool on) {
        force_dijkstra_ = on;
    }

   private:
    bool grow_wavefront();
    bool grow_dijkstra(int ready_penalty);
    std::optional<std::size_t> neighbour_bit(std::size_t bit, int dir) const;

    GridShape shape_;
    const RoutingMasks *masks_ = nullptr;
    bool force_dijkstra_ = false;

    Bitboard comp_;
    Bitboard unconnected_;
    Bitboard targets_;
    Bitboard visited_;
    Bitboard layer_;
    std::vector<Bitboard> fronts_;
    std::vector<std::int32_t> dist_;
    std::vector<std::uint64_t> heap_;
};

/// One-shot wrapper. `access` lists groups of mandatory cells (one group per
/// data double); every cell of every group must be included.
std::optional<SteinerTree> find_steiner_tree(
    const GridShape &shape,
    const std::vector<std::vector<Cell>> &access,
    const RoutingMasks &masks,
    int ready_penalty = 0);

}  // namespace lsched
