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

#include "steiner_oracle.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <stdexcept>

namespace lsched::testing {

namespace {

constexpr int kInf = INT_MAX / 4;

std::vector<int> free_vertices(const GridGraph &g) {
    std::vector<int> v;
    for (int i = 0; i < g.width * g.height; i++) {
        if (g.free[static_cast<std::size_t>(i)]) {
            v.push_back(i);
        }
    }
    return v;
}

std::vector<int> neighbours(const GridGraph &g, int v) {
    int x = v % g.width;
    int y = v / g.width;
    std::vector<int> out;
    const int dx[] = {0, -1, 1, 0};
    const int dy[] = {-1, 0, 0, 1};
    for (int k = 0; k < 4; k++) {
        if (g.usable(x + dx[k], y + dy[k])) {
            out.push_back((y + dy[k]) * g.width + x + dx[k]);
        }
    }
    return out;
}

std::vector<int> bfs(const GridGraph &g, int src) {
    std::vector<int> d(static_cast<std::size_t>(g.width * g.height), kInf);
    std::deque<int> q{src};
    d[static_cast<std::size_t>(src)] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : neighbours(g, u)) {
            if (d[static_cast<std::size_t>(w)] == kInf) {
                d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(u)] + 1;
                q.push_back(w);
            }
        }
    }
    return d;
}

void check_terminals(const GridGraph &g, const std::vector<int> &terminals) {
    if (terminals.empty()) {
        throw std::invalid_argument("need at least one terminal");
    }
    for (int t : terminals) {
        if (t < 0 || t >= g.width * g.height || !g.free[static_cast<std::size_t>(t)]) {
            throw std::invalid_argument("terminal is not a free vertex");
        }
    }
}

}  // namespace

std::optional<int> optimal_steiner_nodes(const GridGraph &g, const std::vector<int> &terminals_in) {
    check_terminals(g, terminals_in);
    std::vector<int> terminals = terminals_in;
    std::sort(terminals.begin(), terminals.end());
    terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
    std::vector<int> verts = free_vertices(g);
    if (verts.size() > 30 || terminals.size() > 4) {
        throw std::invalid_argument("Steiner oracle limited to 30 vertices and 4 terminals");
    }
    const std::size_t n = static_cast<std::size_t>(g.width * g.height);
    std::vector<std::vector<int>> dist(n);
    for (int v : verts) {
        dist[static_cast<std::size_t>(v)] = bfs(g, v);
    }
    int root = terminals.back();
    terminals.pop_back();
    const std::size_t k = terminals.size();
    if (k == 0) {
        return 1;
    }
    for (int t : terminals) {
        if (dist[static_cast<std::size_t>(root)][static_cast<std::size_t>(t)] >= kInf) {
            return std::nullopt;
        }
    }

    // dp[S][v]: fewest edges in a tree spanning terminals S and vertex v.
    const std::size_t full = (std::size_t{1} << k) - 1;
    std::vector<std::vector<int>> dp(full + 1, std::vector<int>(n, kInf));
    for (std::size_t i = 0; i < k; i++) {
        for (int v : verts) {
            dp[std::size_t{1} << i][static_cast<std::size_t>(v)] =
                dist[static_cast<std::size_t>(terminals[i])][static_cast<std::size_t>(v)];
        }
    }
    for (std::size_t s = 1; s <= full; s++) {
        if ((s & (s - 1)) == 0) {
            continue;
        }
        std::vector<int> merged(n, kInf);
        for (int u : verts) {
            for (std::size_t a = (s - 1) & s; a > 0; a = (a - 1) & s) {
                std::size_t b = s ^ a;
                if (a < b) {
                    continue;
                }
                int c = dp[a][static_cast<std::size_t>(u)] + dp[b][static_cast<std::size_t>(u)];
                merged[static_cast<std::size_t>(u)] = std::min(merged[static_cast<std::size_t>(u)], c);
            }
        }
        for (int v : verts) {
            int best = kInf;
            for (int u : verts) {
                int d = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
                if (d < kInf && merged[static_cast<std::size_t>(u)] < kInf) {
                    best = std::min(best, merged[static_cast<std::size_t>(u)] + d);
                }
            }
            dp[s][static_cast<std::size_t>(v)] = best;
        }
    }
    int edges = dp[full][static_cast<std::size_t>(root)];
    if (edges >= kInf) {
        return std::nullopt;
    }
    return edges + 1;
}

std::optional<int> brute_force_steiner_nodes(const GridGraph &g, const std::vector<int> &terminals) {
    check_terminals(g, terminals);
    std::vector<int> verts = free_vertices(g);
    if (verts.size() > 20) {
        throw std::invalid_argument("brute force limited to 20 vertices");
    }
    std::vector<int> index(static_cast<std::size_t>(g.width * g.height), -1);
    for (std::size_t i = 0; i < verts.size(); i++) {
        index[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    }
    std::uint32_t need = 0;
    for (int t : terminals) {
        need |= 1u << index[static_cast<std::size_t>(t)];
    }
    std::optional<int> best;
    for (std::uint32_t s = 1; s < (1u << verts.size()); s++) {
        if ((s & need) != need) {
            continue;
        }
        int size = __builtin_popcount(s);
        if (best && size >= *best) {
            continue;
        }
        // Connectivity by flood fill inside the subset.
        std::uint32_t seen = s & (~s + 1);
        std::uint32_t frontier = seen;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::size_t i = 0; i < verts.size(); i++) {
                if ((frontier >> i) & 1) {
                    for (int w : neighbours(g, verts[i])) {
                        std::uint32_t bit = 1u << index[static_cast<std::size_t>(w)];
                        if ((s & bit) && !(seen & bit)) {
                            next |= bit;
                        }
                    }
                }
            }
            seen |= next;
            frontier = next;
        }
        if (seen == s) {
            best = size;
        }
    }
    return best;
}

}  // namespace lsched::testing
