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
#include <optional>
#include <vector>

#include "lsched/common.hpp"
#include "lsched/grid.hpp"

namespace lsched {

/// Exponential cultivation model. A physical-time sample t ~ Exp(lambda) is
/// converted to logical cycles as max(min_cycles, ceil(t / distance)).
struct CultivationParams {
    double lambda = 0.00227;
    int distance = 17;
    int min_cycles = 1;

    void validate() const;
};

/// Cycles for a given uniform draw u in (0, 1) (inverse CDF).
int cultivation_cycles_from_uniform(double u, const CultivationParams &params);

/// One draw from the stream.
int sample_cultivation_cycles(Rng &rng, const CultivationParams &params);

/// Exact mean of sample_cultivation_cycles: m + q^m / (1 - q), q = exp(-lambda d).
double expected_cultivation_cycles(const CultivationParams &params);

/// lambda giving the requested mean cycle count at `distance` (min_cycles 1).
/// The mean must exceed 1; a mean of exactly 1 is instant magic.
double lambda_for_mean_cycles(double mean_cycles, int distance);

struct CultivationSummary {
    std::uint64_t completed = 0;
    std::uint64_t completed_cycle_sum = 0;
    std::uint64_t terminated = 0;
    std::uint64_t ready_used_for_routing = 0;

    /// Mean duration of completed attempts; empty when nothing completed.
    std::optional<double> avg_completed_cycles() const;
};

/// Per-cell cultivation state machine over a grid.
///
/// Each cultivator is either Cultivating (ready_at known) or Ready. A restart
/// at cycle t draws n cycles and makes the cell Ready at the start of cycle
/// t + n. Construction restarts every cell "at cycle -1" in row-major order.
/// With instant magic every draw is 1 cycle (no random numbers consumed), so
/// every cell is Ready in cycle 0 and again in the cycle after each use.
class CultivationState {
   public:
    CultivationState(
        const GridShape &shape, const Bitboard &cultivators, const CultivationParams &params, bool instant, Rng &rng);

    /// Flips cells whose ready_at <= cycle to Ready and returns the ready set.
    /// Cycles must be non-decreasing (ContractViolation otherwise).
    const Bitboard &advance(int cycle);

    /// Restarts `bit` after it was used in cycle `at_cycle`. An interrupted
    /// Cultivating cell counts as terminated.
    void restart(std::size_t bit, int at_cycle, Rng &rng);

    /// Like restart, but for a Ready cell destroyed as a routing intermediate.
    void destroy_ready(std::size_t bit, int at_cycle, Rng &rng);

    bool is_cultivator(std::size_t bit) const {
        return cultivators_.test(bit);
    }
    bool is_ready(std::size_t bit) const {
        return ready_.test(bit);
    }
    const Bitboard &ready() const {
        return ready_;
    }
    /// Some cell is still cultivating (so the ready set can still grow).
    bool any_cultivating() const;
    /// Earliest ready_at among cultivating cells.
    std::optional<int> next_completion() const;

    const CultivationSummary &summary() const {
        return summary_;
    }
    std::optional<double> avg_completed_cultivation() const {
        return summary_.avg_completed_cycles();
    }

   private:
    static constexpr std::int32_t kIdle = INT32_MAX;

    int draw(Rng &rng) const;

    GridShape shape_;
    Bitboard cultivators_;
    Bitboard ready_;
    Bitboard due_;
    std::vector<std::int32_t> ready_at_;    // kIdle unless cultivating
    std::vector<std::int32_t> started_at_;  // cycle of the last restart
    CultivationParams params_;
    bool instant_;
    int last_cycle_ = INT32_MIN;
    CultivationSummary summary_;
};

}  // namespace lsched
