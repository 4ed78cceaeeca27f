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
#include <string_view>

#include "lsched/pauli.hpp"

namespace lsched {

struct RandGenParams {
    std::size_t num_qubits = 64;
    std::size_t num_products = 20000;
    /// Mean of the (untruncated) geometric product-size distribution.
    double size_mean = 1.0;
    /// Width of the qubit window each product draws from.
    std::size_t spread = 64;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Random product circuit. Each product draws a size k from a geometric
/// distribution with mean size_mean truncated to [1, spread], a window of
/// `spread` consecutive qubits at a uniform offset, k distinct qubits from
/// the window and a uniform X/Y/Z on each.
Circuit generate_random_circuit(const RandGenParams &params);

/// Average products per layer of the circuit's task graph.
double measured_parallelism(const Circuit &circuit);

/// Bisects size_mean (spread = num_qubits) until the generated circuit's
/// products per layer is within 5% of `target`. Targets below what the
/// largest products give saturate at size_mean = num_qubits. Throws
/// InputError for targets outside [1, num_qubits] or above what
/// single-qubit products reach.
RandGenParams calibrate_preset(
    double target, std::size_t num_qubits, std::uint64_t seed, std::size_t num_products = 20000);

enum class Preset : std::uint8_t { Low, Medium, High };

Preset parse_preset(std::string_view name);
std::string_view preset_name(Preset p);
/// Products per layer: 1.42, 7.92 and 25.13.
double preset_target(Preset p);

}  // namespace lsched
