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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lsched/cultivation.hpp"
#include "lsched/layout.hpp"
#include "lsched/routing.hpp"
#include "lsched/task_graph.hpp"

namespace lsched {

enum class Packing : std::uint8_t { MinFit, RandomOrder };

std::string_view packing_name(Packing p);  // "minfit" | "random"
Packing parse_packing(std::string_view name);

struct SchedulerConfig {
    CultivationParams cultivation;
    /// Every cultivation takes exactly one cycle; overrides the parameters above.
    bool instant_magic = false;
    Packing packing = Packing::MinFit;
    AccessRules access;
    /// Extra path cost for routing through a ready cell (pure magic only matters).
    int ready_penalty = 0;
    /// Bus architecture: let ring cells route, not only terminate a tree.
    bool bus_ring_intermediates = false;
    std::uint64_t seed = 0;
    /// Reuse candidate trees inside a cycle when a commit cannot affect them.
    bool memoize = true;

    void validate() const;
};

/// Compatibility preset: instant magic, no top/bottom edges, random packing.
SchedulerConfig silva_compat_config(std::uint64_t seed);

struct Placement {
    int cycle = 0;
    std::uint32_t product = 0;
    SteinerTree tree;
};

struct ScheduleResult {
    int cycles = 0;
    std::vector<Placement> placements;  // by cycle, then commit order
    CultivationSummary cultivation;
};

/// Everything the packer needs to know about one schedulable product.
struct PackCandidate {
    std::uint32_t seq = 0;
    std::vector<Cell> mandatory;  // row-major, deduplicated
    std::vector<int> doubles;     // data doubles touched, ascending
};

/// Builds the candidate for one product, or throws SchedulingError if the
/// access rules leave some double without an admissible mode.
PackCandidate make_candidate(const Layout &layout, const PauliProduct &product, const AccessRules &rules);

struct Commit {
    std::size_t candidate = 0;  // index into the candidate list
    SteinerTree tree;
};

/// Greedy minimum-fit packing of one cycle. Repeatedly commits the candidate
/// with the lightest tree (ties: lowest seq), removing its cells from
/// `masks` and its doubles from further use, until nothing else fits.
std::vector<Commit> minfit_pack(
    const std::vector<PackCandidate> &candidates,
    RoutingMasks &masks,
    const SchedulerConfig &config,
    SteinerSolver &solver);

/// Visits candidates in a random permutation, committing each one that fits.
std::vector<Commit> random_order_pack(
    const std::vector<PackCandidate> &candidates,
    RoutingMasks &masks,
    const SchedulerConfig &config,
    SteinerSolver &solver,
    Rng &rng);

/// Routing masks at the start of a cycle given the ready set.
RoutingMasks cycle_masks(const Layout &layout, const Bitboard &ready, const SchedulerConfig &config);

/// Runs the cycle loop until every product has executed.
///
/// Throws SchedulingError if a product cannot be routed even on an idle grid
/// with every magic cell ready, or if a cycle commits nothing while no
/// cultivation is in progress.
ScheduleResult run_schedule(const TaskGraph &graph, const Layout &layout, const SchedulerConfig &config);

/// Structural checks on a schedule: each product placed once, dependencies
/// respected, trees connected, disjoint within a cycle, covering their access
/// cells and consuming one magic-capable cell, one product per double per
/// cycle. Returns one message per violation (empty when valid).
std::vector<std::string> validate_schedule(
    const TaskGraph &graph,
    const Layout &layout,
    const SchedulerConfig &config,
    int cycles,
    const std::vector<Placement> &placements);

}  // namespace lsched
