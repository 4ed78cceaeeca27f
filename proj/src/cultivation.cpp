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

#include "lsched/cultivation.hpp"

#include <algorithm>
#include <cmath>

#include "lsched/kernels.hpp"

namespace lsched {

void CultivationParams::validate() const {
    if (!(lambda > 0) || !std::isfinite(lambda)) {
        throw ContractViolation("cultivation lambda must be positive and finite");
    }
    if (distance < 1) {
        throw ContractViolation("code distance must be at least 1");
    }
    if (min_cycles < 1) {
        throw ContractViolation("minimum cultivation cycles must be at least 1");
    }
}

int cultivation_cycles_from_uniform(double u, const CultivationParams &params) {
    double t = -std::log(u) / params.lambda;
    double cycles = std::ceil(t / params.distance);
    // Clamp absurd tails before converting; 2^30 cycles is far beyond any run.
    cycles = std::min(cycles, static_cast<double>(1 << 30));
    return std::max(params.min_cycles, static_cast<int>(cycles));
}

int sample_cultivation_cycles(Rng &rng, const CultivationParams &params) {
    return cultivation_cycles_from_uniform(rng.uniform_open(), params);
}

double expected_cultivation_cycles(const CultivationParams &params) {
    double q = std::exp(-params.lambda * params.distance);
    return params.min_cycles + std::pow(q, params.min_cycles) / (1.0 - q);
}

double lambda_for_mean_cycles(double mean_cycles, int distance) {
    if (!(mean_cycles > 1.0)) {
        throw ContractViolation("mean cultivation cycles must exceed 1 (use instant magic for 1)");
    }
    double q = 1.0 - 1.0 / mean_cycles;
    return -std::log(q) / distance;
}

std::optional<double> CultivationSummary::avg_completed_cycles() const {
    if (completed == 0) {
        return std::nullopt;
    }
    return static_cast<double>(completed_cycle_sum) / static_cast<double>(completed);
}

CultivationState::CultivationState(
    const GridShape &shape, const Bitboard &cultivators, const CultivationParams &params, bool instant, Rng &rng)
    : shape_(shape),
      cultivators_(cultivators),
      ready_(shape),
      due_(shape),
      ready_at_(shape.bits(), kIdle),
      started_at_(shape.bits(), 0),
      params_(params),
      instant_(instant) {
    if (!instant_) {
        params_.validate();
    }
    cultivators_.for_each([&](std::size_t b) {
        started_at_[b] = -1;
        ready_at_[b] = -1 + draw(rng);
    });
}

int CultivationState::draw(Rng &rng) const {
    return instant_ ? 1 : sample_cultivation_cycles(rng, params_);
}

const Bitboard &CultivationState::advance(int cycle) {
    if (cycle < last_cycle_) {
        throw ContractViolation("cultivation advanced to an earlier cycle");
    }
    last_cycle_ = cycle;
    kernels::active().due_mask(ready_at_.data(), cycle, due_.data(), due_.words());
    due_.for_each([&](std::size_t b) {
        summary_.completed++;
        summary_.completed_cycle_sum += static_cast<std::uint64_t>(ready_at_[b] - started_at_[b]);
        ready_at_[b] = kIdle;
        ready_.set(b);
    });
    return ready_;
}

void CultivationState::restart(std::size_t bit, int at_cycle, Rng &rng) {
    if (!cultivators_.test(bit)) {
        throw ContractViolation("restart on a cell that does not cultivate");
    }
    if (!ready_.test(bit)) {
        summary_.terminated++;
    }
    ready_.reset(bit);
    started_at_[bit] = at_cycle;
    ready_at_[bit] = at_cycle + draw(rng);
}

void CultivationState::destroy_ready(std::size_t bit, int at_cycle, Rng &rng) {
    if (!ready_.test(bit)) {
        throw ContractViolation("destroy_ready on a cell that is not ready");
    }
    summary_.ready_used_for_routing++;
    restart(bit, at_cycle, rng);
}

bool CultivationState::any_cultivating() const {
    return std::any_of(ready_at_.begin(), ready_at_.end(), [](std::int32_t v) {
        return v != kIdle;
    });
}

std::optional<int> CultivationState::next_completion() const {
    auto it = std::min_element(ready_at_.begin(), ready_at_.end());
    if (it == ready_at_.end() || *it == kIdle) {
        return std::nullopt;
    }
    return *it;
}

}  // namespace lsched
