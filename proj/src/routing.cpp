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

#include "lsched/routing.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "lsched/common.hpp"
#include "lsched/kernels.hpp"

namespace lsched {

namespace {

constexpr std::int32_t kUnreached = INT32_MAX;

std::optional<std::size_t> first_common_bit(const Bitboard &a, const Bitboard &b) {
    const std::uint64_t *pa = a.data();
    const std::uint64_t *pb = b.data();
    for (std::size_t w = 0; w < a.words(); w++) {
        if (std::uint64_t v = pa[w] & pb[w]) {
            return w * 64 + static_cast<std::size_t>(std::countr_zero(v));
        }
    }
    return std::nullopt;
}

}  // namespace

SteinerSolver::SteinerSolver(const GridShape &shape)
    : shape_(shape),
      comp_(shape),
      unconnected_(shape),
      targets_(shape),
      visited_(shape),
      layer_(shape) {
}

// Direction order matters for the trace: up, left, right, down.
std::optional<std::size_t> SteinerSolver::neighbour_bit(std::size_t bit, int dir) const {
    Cell c = shape_.cell(bit);
    switch (dir) {
        case 0:
            c.y--;
            break;
        case 1:
            c.x--;
            break;
        case 2:
            c.x++;
            break;
        default:
            c.y++;
            break;
    }
    if (!shape_.contains(c)) {
        return std::nullopt;
    }
    return shape_.bit(c);
}

bool SteinerSolver::grow_wavefront() {
    const kernels::KernelTable &k = kernels::active();
    const std::size_t words = shape_.words();
    const std::size_t rw = shape_.row_words();

    visited_ = comp_;
    if (fronts_.empty()) {
        fronts_.emplace_back(shape_);
    }
    fronts_[0] = comp_;
    fronts_[0] &= masks_->pass;

    std::size_t depth = 0;
    while (true) {
        if (fronts_.size() < depth + 2) {
            fronts_.emplace_back(shape_);
        }
        kernels::ExpandResult r = k.expand(
            fronts_[depth].data(),
            visited_.data(),
            masks_->pass.data(),
            masks_->stop.data(),
            targets_.data(),
            layer_.data(),
            fronts_[depth + 1].data(),
            words,
            rw);
        depth++;
        if (r.hit) {
            break;
        }
        if (!r.grew) {
            return false;
        }
    }

    std::size_t cur = *first_common_bit(layer_, targets_);
    comp_.set(cur);
    for (std::size_t j = depth - 1; j >= 1; j--) {
        for (int dir = 0; dir < 4; dir++) {
            auto nb = neighbour_bit(cur, dir);
            if (nb && fronts_[j].test(*nb)) {
                cur = *nb;
                break;
            }
        }
        comp_.set(cur);
    }
    return true;
}

bool SteinerSolver::grow_dijkstra(int ready_penalty) {
    const Bitboard &pass = masks_->pass;
    const Bitboard &stop = masks_->stop;
    const Bitboard &ready = masks_->ready;
    auto cost = [&](std::size_t b) {
        return 1 + (ready.test(b) ? ready_penalty : 0);
    };

    dist_.assign(shape_.bits(), kUnreached);
    heap_.clear();
    auto push = [&](std::int32_t d, std::size_t b) {
        heap_.push_back((static_cast<std::uint64_t>(d) << 32) | b);
        std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
    };
    comp_.for_each([&](std::size_t b) {
        dist_[b] = 0;
        if (pass.test(b)) {
            push(0, b);
        }
    });
    while (!heap_.empty()) {
        std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
        std::uint64_t top = heap_.back();
        heap_.pop_back();
        auto d = static_cast<std::int32_t>(top >> 32);
        std::size_t u = top & 0xFFFFFFFFu;
        if (d != dist_[u] || !pass.test(u)) {
            continue;
        }
        for (int dir = 0; dir < 4; dir++) {
            auto v = neighbour_bit(u, dir);
            if (!v || comp_.test(*v) || !(pass.test(*v) || stop.test(*v))) {
                continue;
            }
            std::int32_t nd = d + cost(*v);
            if (nd < dist_[*v]) {
                dist_[*v] = nd;
                push(nd, *v);
            }
        }
    }

    std::optional<std::size_t> best;
    targets_.for_each([&](std::size_t b) {
        if (dist_[b] != kUnreached && (!best || dist_[b] < dist_[*best])) {
            best = b;
        }
    });
    if (!best) {
        return false;
    }
    std::size_t cur = *best;
    comp_.set(cur);
    while (true) {
        std::optional<std::size_t> prev;
        for (int dir = 0; dir < 4 && !prev; dir++) {
            auto u = neighbour_bit(cur, dir);
            if (u && pass.test(*u) && dist_[*u] != kUnreached && dist_[*u] + cost(cur) == dist_[cur]) {
                prev = u;
            }
        }
        if (dist_[*prev] == 0) {
            break;
        }
        cur = *prev;
        comp_.set(cur);
    }
    return true;
}

std::optional<SteinerTree> SteinerSolver::solve(
    const std::vector<Cell> &mandatory, const RoutingMasks &masks, int ready_penalty) {
    if (mandatory.empty()) {
        throw ContractViolation("a Steiner search needs at least one mandatory cell");
    }
    if (ready_penalty < 0) {
        throw ContractViolation("ready penalty must be non-negative");
    }
    masks_ = &masks;
    comp_.clear();
    unconnected_.clear();
    for (const Cell &c : mandatory) {
        if (!shape_.contains(c) || !masks.pass.test(shape_.bit(c))) {
            return std::nullopt;
        }
        unconnected_.set(shape_.bit(c));
    }
    std::size_t start = *unconnected_.first();
    comp_.set(start);
    unconnected_.reset(start);

    const bool dijkstra = ready_penalty > 0 || force_dijkstra_;
    while (true) {
        bool attached = comp_.intersects(masks.ready);
        if (attached && !unconnected_.any()) {
            break;
        }
        targets_ = unconnected_;
        if (!attached) {
            targets_ |= masks.ready;
        }
        if (!(dijkstra ? grow_dijkstra(ready_penalty) : grow_wavefront())) {
            return std::nullopt;
        }
        unconnected_.and_not(comp_);
    }

    SteinerTree tree;
    tree.cells.reserve(comp_.count());
    comp_.for_each([&](std::size_t b) {
        tree.cells.push_back(shape_.cell(b));
    });
    tree.magic_cell = shape_.cell(*first_common_bit(comp_, masks.ready));
    tree.weight = static_cast<int>(tree.cells.size());
    return tree;
}

std::optional<SteinerTree> find_steiner_tree(
    const GridShape &shape,
    const std::vector<std::vector<Cell>> &access,
    const RoutingMasks &masks,
    int ready_penalty) {
    std::vector<Cell> mandatory;
    for (const auto &group : access) {
        if (group.empty()) {
            return std::nullopt;
        }
        mandatory.insert(mandatory.end(), group.begin(), group.end());
    }
    if (mandatory.empty()) {
        return std::nullopt;
    }
    SteinerSolver solver(shape);
    return solver.solve(mandatory, masks, ready_penalty);
}

}  // namespace lsched
