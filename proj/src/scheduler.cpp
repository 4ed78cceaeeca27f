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

#include "lsched/scheduler.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lsched/common.hpp"

namespace lsched {

std::string_view packing_name(Packing p) {
    return p == Packing::MinFit ? "minfit" : "random";
}

Packing parse_packing(std::string_view name) {
    if (name == "minfit") {
        return Packing::MinFit;
    }
    if (name == "random" || name == "random_order" || name == "random-order") {
        return Packing::RandomOrder;
    }
    throw InputError("unknown packing '" + std::string(name) + "' (expected minfit or random)");
}

void SchedulerConfig::validate() const {
    if (!instant_magic) {
        cultivation.validate();
    }
    if (ready_penalty < 0) {
        throw ContractViolation("ready penalty must be non-negative");
    }
}

SchedulerConfig silva_compat_config(std::uint64_t seed) {
    SchedulerConfig c;
    c.instant_magic = true;
    c.packing = Packing::RandomOrder;
    c.access.allow_horizontal_edges = false;
    c.seed = seed;
    return c;
}

PackCandidate make_candidate(const Layout &layout, const PauliProduct &product, const AccessRules &rules) {
    PackCandidate c;
    c.seq = static_cast<std::uint32_t>(product.seq());
    for (const auto &opts : access_options(layout, product, rules)) {
        if (opts.empty()) {
            throw SchedulingError(
                "product " + std::to_string(product.seq()) + " (" + product.str() +
                    ") needs both sides of one double, which strict single-side access forbids",
                static_cast<std::int64_t>(product.seq()));
        }
        c.doubles.push_back(opts.front().double_id);
        c.mandatory.insert(c.mandatory.end(), opts.front().cells.begin(), opts.front().cells.end());
    }
    std::sort(c.mandatory.begin(), c.mandatory.end());
    c.mandatory.erase(std::unique(c.mandatory.begin(), c.mandatory.end()), c.mandatory.end());
    return c;
}

RoutingMasks cycle_masks(const Layout &layout, const Bitboard &ready, const SchedulerConfig &config) {
    RoutingMasks m(layout.shape());
    m.pass = layout.interior_ancilla();
    m.ready = ready;
    m.ready &= layout.magic_capable();
    if (layout.arch() == Arch::Bus) {
        if (config.bus_ring_intermediates) {
            m.pass |= layout.ring();
        } else {
            m.stop = m.ready;
            m.stop &= layout.ring();
        }
    }
    return m;
}

namespace {

class DoubleSet {
   public:
    bool any(const std::vector<int> &ids) const {
        for (int d : ids) {
            if (static_cast<std::size_t>(d) < used_.size() && used_[static_cast<std::size_t>(d)]) {
                return true;
            }
        }
        return false;
    }
    void add(const std::vector<int> &ids) {
        for (int d : ids) {
            if (static_cast<std::size_t>(d) >= used_.size()) {
                used_.resize(static_cast<std::size_t>(d) + 1, 0);
            }
            used_[static_cast<std::size_t>(d)] = 1;
        }
    }

   private:
    std::vector<char> used_;
};

Bitboard tree_mask(const GridShape &shape, const SteinerTree &tree) {
    Bitboard b(shape);
    for (const Cell &c : tree.cells) {
        b.set(shape.bit(c));
    }
    return b;
}

void take_cells(RoutingMasks &masks, const Bitboard &cells) {
    masks.pass.and_not(cells);
    masks.stop.and_not(cells);
    masks.ready.and_not(cells);
}

}  // namespace

std::vector<Commit> minfit_pack(
    const std::vector<PackCandidate> &candidates,
    RoutingMasks &masks,
    const SchedulerConfig &config,
    SteinerSolver &solver) {
    enum : char { Dirty, Fresh, Excluded };

    const std::size_t n = candidates.size();
    std::vector<std::optional<SteinerTree>> trees(n);
    std::vector<Bitboard> cells(n);
    std::vector<char> state(n, Dirty);
    DoubleSet used;
    std::vector<Commit> out;

    while (true) {
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < n; i++) {
            if (state[i] == Excluded) {
                continue;
            }
            if (used.any(candidates[i].doubles)) {
                state[i] = Excluded;
                continue;
            }
            if (state[i] == Dirty || !config.memoize) {
                trees[i] = solver.solve(candidates[i].mandatory, masks, config.ready_penalty);
                state[i] = Fresh;
                if (trees[i]) {
                    cells[i] = tree_mask(solver.shape(), *trees[i]);
                }
            }
            if (!trees[i]) {
                continue;
            }
            if (!best || trees[i]->weight < trees[*best]->weight ||
                (trees[i]->weight == trees[*best]->weight && candidates[i].seq < candidates[*best].seq)) {
                best = i;
            }
        }
        if (!best) {
            break;
        }
        std::size_t b = *best;
        take_cells(masks, cells[b]);
        used.add(candidates[b].doubles);
        state[b] = Excluded;
        // A search whose tree avoids every committed cell sees only removed
        // cells elsewhere; its distances and tie-breaks along that tree are
        // unchanged, so the cached result stays exact.
        for (std::size_t i = 0; i < n; i++) {
            if (state[i] == Fresh && trees[i] && cells[i].intersects(cells[b])) {
                state[i] = Dirty;
            }
        }
        out.push_back({b, std::move(*trees[b])});
    }
    return out;
}

std::vector<Commit> random_order_pack(
    const std::vector<PackCandidate> &candidates,
    RoutingMasks &masks,
    const SchedulerConfig &config,
    SteinerSolver &solver,
    Rng &rng) {
    std::vector<std::size_t> order(candidates.size());
    for (std::size_t i = 0; i < order.size(); i++) {
        order[i] = i;
    }
    for (std::size_t i = order.size(); i > 1; i--) {
        std::swap(order[i - 1], order[rng.below(i)]);
    }
    DoubleSet used;
    std::vector<Commit> out;
    for (std::size_t i : order) {
        if (used.any(candidates[i].doubles)) {
            continue;
        }
        auto tree = solver.solve(candidates[i].mandatory, masks, config.ready_penalty);
        if (!tree) {
            continue;
        }
        take_cells(masks, tree_mask(solver.shape(), *tree));
        used.add(candidates[i].doubles);
        out.push_back({i, std::move(*tree)});
    }
    return out;
}

ScheduleResult run_schedule(const TaskGraph &graph, const Layout &layout, const SchedulerConfig &config) {
    config.validate();
    const Circuit &circuit = graph.circuit();
    if (circuit.num_qubits > layout.num_data_qubits()) {
        throw ContractViolation(
            "circuit has " + std::to_string(circuit.num_qubits) + " qubits but the layout holds only " +
            std::to_string(layout.num_data_qubits()));
    }
    const GridShape &shape = layout.shape();
    const std::size_t n = graph.size();

    std::vector<PackCandidate> all;
    all.reserve(n);
    for (std::size_t p = 0; p < n; p++) {
        all.push_back(make_candidate(layout, graph.product(p), config.access));
    }

    SteinerSolver solver(shape);
    {
        RoutingMasks idle = cycle_masks(layout, layout.magic_capable(), config);
        std::set<std::vector<Cell>> routable;
        for (const PackCandidate &c : all) {
            if (routable.count(c.mandatory)) {
                continue;
            }
            if (!solver.solve(c.mandatory, idle, config.ready_penalty)) {
                throw SchedulingError(
                    "product " + std::to_string(c.seq) + " (" + graph.product(c.seq).str() +
                        ") cannot be routed even on an idle grid",
                    c.seq);
            }
            routable.insert(c.mandatory);
        }
    }

    Rng rng(config.seed);
    Rng pack_rng(config.seed ^ 0x9E3779B97F4A7C15ULL);
    CultivationState cult(shape, layout.magic_capable(), config.cultivation, config.instant_magic, rng);

    std::vector<std::size_t> pending(n);
    std::vector<std::uint32_t> available;
    for (std::size_t p = 0; p < n; p++) {
        pending[p] = graph.predecessors(p).size();
        if (pending[p] == 0) {
            available.push_back(static_cast<std::uint32_t>(p));
        }
    }

    ScheduleResult result;
    result.placements.reserve(n);
    std::vector<PackCandidate> cands;
    std::vector<std::size_t> restarts;
    std::vector<std::uint32_t> next;
    Bitboard consumed(shape);
    std::size_t done = 0;
    int cycle = 0;
    while (done < n) {
        const Bitboard &ready = cult.advance(cycle);
        RoutingMasks masks = cycle_masks(layout, ready, config);
        cands.clear();
        for (std::uint32_t p : available) {
            cands.push_back(all[p]);
        }
        std::vector<Commit> commits = config.packing == Packing::MinFit
                                          ? minfit_pack(cands, masks, config, solver)
                                          : random_order_pack(cands, masks, config, solver, pack_rng);
        if (commits.empty()) {
            auto wake = cult.next_completion();
            if (!wake) {
                throw SchedulingError(
                    "no product could be placed in cycle " + std::to_string(cycle) +
                        " and no magic state is cultivating",
                    available.front());
            }
            cycle = std::max(cycle + 1, *wake);
            continue;
        }

        restarts.clear();
        consumed.clear();
        next.clear();
        std::vector<char> committed_now(available.size(), 0);
        for (Commit &c : commits) {
            std::uint32_t p = cands[c.candidate].seq;
            committed_now[c.candidate] = 1;
            std::size_t magic = shape.bit(c.tree.magic_cell);
            consumed.set(magic);
            for (const Cell &cell : c.tree.cells) {
                std::size_t b = shape.bit(cell);
                if (layout.arch() == Arch::PureMagic || b == magic ||
                    (config.bus_ring_intermediates && layout.ring().test(b))) {
                    restarts.push_back(b);
                }
            }
            result.placements.push_back({cycle, p, std::move(c.tree)});
            done++;
            for (std::size_t s : graph.successors(p)) {
                if (--pending[s] == 0) {
                    next.push_back(static_cast<std::uint32_t>(s));
                }
            }
        }
        std::sort(restarts.begin(), restarts.end());
        for (std::size_t b : restarts) {
            if (cult.is_ready(b) && !consumed.test(b)) {
                cult.destroy_ready(b, cycle, rng);
            } else {
                cult.restart(b, cycle, rng);
            }
        }
        std::size_t keep = 0;
        for (std::size_t i = 0; i < available.size(); i++) {
            if (!committed_now[i]) {
                available[keep++] = available[i];
            }
        }
        available.resize(keep);
        available.insert(available.end(), next.begin(), next.end());
        std::sort(available.begin(), available.end());
        cycle++;
    }
    result.cycles = cycle;
    result.cultivation = cult.summary();
    return result;
}

namespace {

bool connected(const std::vector<Cell> &cells) {
    if (cells.empty()) {
        return false;
    }
    std::set<Cell> todo(cells.begin(), cells.end());
    std::vector<Cell> stack{cells.front()};
    todo.erase(cells.front());
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        for (Cell nb : {Cell{c.x, c.y - 1}, Cell{c.x - 1, c.y}, Cell{c.x + 1, c.y}, Cell{c.x, c.y + 1}}) {
            if (todo.erase(nb)) {
                stack.push_back(nb);
            }
        }
    }
    return todo.empty();
}

}  // namespace

std::vector<std::string> validate_schedule(
    const TaskGraph &graph,
    const Layout &layout,
    const SchedulerConfig &config,
    int cycles,
    const std::vector<Placement> &placements) {
    std::vector<std::string> errors;
    auto fail = [&](std::string msg) {
        errors.push_back(std::move(msg));
    };
    const std::size_t n = graph.size();
    std::vector<int> cycle_of(n, -1);

    for (const Placement &pl : placements) {
        std::string who = "product " + std::to_string(pl.product);
        if (pl.product >= n) {
            fail(who + ": not in the circuit");
            continue;
        }
        if (cycle_of[pl.product] >= 0) {
            fail(who + ": placed more than once");
            continue;
        }
        cycle_of[pl.product] = pl.cycle;
        if (pl.cycle < 0 || pl.cycle >= cycles) {
            fail(who + ": cycle " + std::to_string(pl.cycle) + " outside [0, " + std::to_string(cycles) + ")");
        }

        const SteinerTree &t = pl.tree;
        if (t.weight != static_cast<int>(t.cells.size())) {
            fail(who + ": weight does not match cell count");
        }
        if (!std::is_sorted(t.cells.begin(), t.cells.end()) ||
            std::adjacent_find(t.cells.begin(), t.cells.end()) != t.cells.end()) {
            fail(who + ": tree cells not in strict row-major order");
        }
        bool bad_cell = false;
        for (const Cell &c : t.cells) {
            CellRole r = layout.role(c);
            bool ok = r == CellRole::Bus || r == CellRole::Cultivator ||
                      (r == CellRole::Magic && (c == t.magic_cell || config.bus_ring_intermediates));
            if (!ok) {
                fail(who + ": cell " + cell_str(c) + " (" + std::string(role_name(r)) + ") cannot be part of a tree");
                bad_cell = true;
            }
        }
        if (!std::binary_search(t.cells.begin(), t.cells.end(), t.magic_cell)) {
            fail(who + ": magic cell " + cell_str(t.magic_cell) + " not in tree");
        } else if (!bad_cell && !layout.magic_capable().test(layout.shape().bit(t.magic_cell))) {
            fail(who + ": magic cell " + cell_str(t.magic_cell) + " cannot hold magic");
        }
        if (!connected(t.cells)) {
            fail(who + ": tree is not connected");
        }
        try {
            PackCandidate cand = make_candidate(layout, graph.product(pl.product), config.access);
            for (const Cell &m : cand.mandatory) {
                if (!std::binary_search(t.cells.begin(), t.cells.end(), m)) {
                    fail(who + ": access cell " + cell_str(m) + " missing from tree");
                }
            }
        } catch (const std::exception &e) {
            fail(who + ": " + e.what());
        }
    }

    for (std::size_t p = 0; p < n; p++) {
        if (cycle_of[p] < 0) {
            fail("product " + std::to_string(p) + ": never placed");
            continue;
        }
        for (std::size_t q : graph.predecessors(p)) {
            if (cycle_of[q] >= 0 && cycle_of[q] >= cycle_of[p]) {
                fail(
                    "product " + std::to_string(p) + " runs in cycle " + std::to_string(cycle_of[p]) +
                    " but depends on product " + std::to_string(q) + " in cycle " + std::to_string(cycle_of[q]));
            }
        }
    }

    std::map<int, std::map<Cell, std::uint32_t>> cells_at;
    std::map<int, std::map<int, std::uint32_t>> doubles_at;
    for (const Placement &pl : placements) {
        if (pl.product >= n) {
            continue;
        }
        auto &cell_owner = cells_at[pl.cycle];
        for (const Cell &c : pl.tree.cells) {
            auto [it, fresh] = cell_owner.emplace(c, pl.product);
            if (!fresh && it->second != pl.product) {
                fail(
                    "cycle " + std::to_string(pl.cycle) + ": cell " + cell_str(c) + " used by products " +
                    std::to_string(it->second) + " and " + std::to_string(pl.product));
            }
        }
        auto &double_owner = doubles_at[pl.cycle];
        std::set<int> ds;
        for (const PauliTerm &t : graph.product(pl.product).terms()) {
            ds.insert(layout.double_of(t.qubit));
        }
        for (int d : ds) {
            auto [it, fresh] = double_owner.emplace(d, pl.product);
            if (!fresh && it->second != pl.product) {
                fail(
                    "cycle " + std::to_string(pl.cycle) + ": double " + std::to_string(d) + " used by products " +
                    std::to_string(it->second) + " and " + std::to_string(pl.product));
            }
        }
    }
    return errors;
}

}  // namespace lsched
