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
#include <random>
#include <stdexcept>
#include <string>

namespace lsched {

/// Malformed input (gate files, product files, experiment specs).
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition.
class ContractViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// The scheduler cannot make progress: a product is unroutable or magic supply starved.
class SchedulingError : public std::runtime_error {
   public:
    SchedulingError(const std::string &what, std::int64_t product_seq)
        : std::runtime_error(what), product_seq_(product_seq) {
    }
    std::int64_t product_seq() const {
        return product_seq_;
    }

   private:
    std::int64_t product_seq_;
};

/// Seeded random stream shared by a single run.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and
/// derives doubles and bounded integers with explicit arithmetic, so that
/// runs are bit-identical across standard library implementations.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }

    std::uint64_t next_u64() {
        return engine_();
    }

    /// Uniform double strictly inside (0, 1).
    double uniform_open() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) {
            throw ContractViolation("Rng::below called with n == 0");
        }
        std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
        while (true) {
            std::uint64_t v = engine_();
            if (v < limit) {
                return v % n;
            }
        }
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace lsched
