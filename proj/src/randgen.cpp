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

#include "lsched/randgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "lsched/common.hpp"
#include "lsched/task_graph.hpp"

namespace lsched {

void RandGenParams::validate() const {
    if (num_qubits < 1) {
        throw InputError("random circuits need at least one qubit");
    }
    if (!(size_mean >= 1.0) || size_mean > static_cast<double>(num_qubits)) {
        throw InputError("size_mean must lie in [1, num_qubits]");
    }
    if (spread < 1 || spread > num_qubits) {
        throw InputError("spread must lie in [1, num_qubits]");
    }
}

namespace {

std::size_t draw_size(Rng &rng, double mean, std::size_t cap) {
    double p = 1.0 / mean;
    if (p >= 1.0 || cap == 1) {
        return 1;
    }
    double u = rng.uniform_open();
    double tail = 1.0 - std::pow(1.0 - p, static_cast<double>(cap));
    double k = std::ceil(std::log1p(-u * tail) / std::log1p(-p));
    return std::clamp(static_cast<std::size_t>(std::max(k, 1.0)), std::size_t{1}, cap);
}

}  // namespace

Circuit generate_random_circuit(const RandGenParams &params) {
    params.validate();
    Rng sizes(params.seed);
    Rng places(params.seed ^ 0xD1B54A32D192ED03ULL);

    Circuit c;
    c.num_qubits = params.num_qubits;
    c.products.reserve(params.num_products);
    std::vector<Qubit> window(params.spread);
    for (std::size_t i = 0; i < params.num_products; i++) {
        std::size_t k = draw_size(sizes, params.size_mean, params.spread);
        std::size_t offset = places.below(params.num_qubits - params.spread + 1);
        std::iota(window.begin(), window.end(), static_cast<Qubit>(offset));
        std::vector<PauliTerm> terms;
        terms.reserve(k);
        for (std::size_t j = 0; j < k; j++) {
            std::size_t pick = j + places.below(window.size() - j);
            std::swap(window[j], window[pick]);
            auto op = static_cast<Pauli>(1 + places.below(3));
            terms.push_back({window[j], op});
        }
        c.products.emplace_back(std::move(terms), i);
    }
    return c;
}

double measured_parallelism(const Circuit &circuit) {
    return parallelism_stats(TaskGraph(circuit)).avg_products_per_layer;
}

RandGenParams calibrate_preset(double target, std::size_t num_qubits, std::uint64_t seed, std::size_t num_products) {
    if (num_qubits < 1 || num_products < 1) {
        throw InputError("calibration needs at least one qubit and one product");
    }
    if (!(target >= 1.0) || target > static_cast<double>(num_qubits)) {
        throw InputError(
            "products-per-layer target " + std::to_string(target) + " is outside [1, " + std::to_string(num_qubits) +
            "]");
    }
    RandGenParams p;
    p.num_qubits = num_qubits;
    p.num_products = num_products;
    p.spread = num_qubits;
    p.seed = seed;

    auto measure = [&](double size_mean) {
        p.size_mean = size_mean;
        return measured_parallelism(generate_random_circuit(p));
    };
    auto close = [&](double v) {
        return std::abs(v - target) <= 0.05 * target;
    };

    double lo = 1.0;
    double hi = static_cast<double>(num_qubits);
    double at_lo = measure(lo);
    if (close(at_lo)) {
        return p;
    }
    double at_hi = measure(hi);
    if (close(at_hi) || target < at_hi) {
        return p;
    }
    if (target > at_lo) {
        throw InputError(
            "products-per-layer target " + std::to_string(target) + " is unreachable with " +
            std::to_string(num_qubits) + " qubits (range " + std::to_string(at_hi) + " to " + std::to_string(at_lo) +
            ")");
    }
    for (int iter = 0; iter < 64; iter++) {
        double mid = std::sqrt(lo * hi);
        double v = measure(mid);
        if (close(v)) {
            return p;
        }
        if (v > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw InputError("calibration did not reach products-per-layer " + std::to_string(target) + " within 5%");
}

Preset parse_preset(std::string_view name) {
    if (name == "low") {
        return Preset::Low;
    }
    if (name == "medium") {
        return Preset::Medium;
    }
    if (name == "high") {
        return Preset::High;
    }
    throw InputError("unknown preset '" + std::string(name) + "' (expected low, medium or high)");
}

std::string_view preset_name(Preset p) {
    switch (p) {
        case Preset::Low:
            return "low";
        case Preset::Medium:
            return "medium";
        case Preset::High:
            return "high";
    }
    return "?";
}

double preset_target(Preset p) {
    switch (p) {
        case Preset::Low:
            return 1.42;
        case Preset::Medium:
            return 7.92;
        case Preset::High:
            return 25.13;
    }
    return 0;
}

}  // namespace lsched
