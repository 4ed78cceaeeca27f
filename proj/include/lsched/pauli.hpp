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
#include <utility>
#include <vector>

namespace lsched {

using Qubit = std::uint32_t;

/// Non-identity single-qubit Pauli. Identity is represented by absence.
enum class Pauli : std::uint8_t { X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

struct PauliTerm {
    Qubit qubit;
    Pauli op;

    bool operator==(const PauliTerm &) const = default;
};

/// One pi/8 rotation exp(-i P pi/8): the unit of scheduled work.
///
/// Terms are kept sorted by qubit with no duplicates; the sequence index is
/// the product's position in its circuit.
class PauliProduct {
   public:
    PauliProduct() = default;
    /// Sorts the terms; throws ContractViolation on an empty list or a repeated qubit.
    PauliProduct(std::vector<PauliTerm> terms, std::size_t seq);

    /// Parses the canonical token form, e.g. "X0 Y4 Z6". Tokens may appear in
    /// any order on input; the stored form is sorted. Throws InputError.
    static PauliProduct parse(std::string_view text, std::size_t seq);

    /// Canonical token form: space separated `<P><q>` sorted by qubit.
    std::string str() const;

    const std::vector<PauliTerm> &terms() const {
        return terms_;
    }
    std::size_t size() const {
        return terms_.size();
    }
    std::size_t seq() const {
        return seq_;
    }
    Qubit max_qubit() const {
        return terms_.back().qubit;
    }
    /// Looks up the operator on qubit q; false if q is untouched.
    bool find(Qubit q, Pauli *out) const;

    bool operator==(const PauliProduct &) const = default;

   private:
    std::vector<PauliTerm> terms_;
    std::size_t seq_ = 0;
};

/// Ordered sequence of pi/8 products over `num_qubits` logical qubits.
struct Circuit {
    std::size_t num_qubits = 0;
    std::vector<PauliProduct> products;
    /// Optional rotation direction per product (+1 / -1), filled by the
    /// transpiler. Scheduling never reads it; empty means "all +1".
    std::vector<std::int8_t> rotation_signs;

    /// Throws InputError if any product is out of range or seq fields are not 0..n-1.
    void validate() const;
};

/// Reads the product-file JSON document. Unknown fields are rejected.
Circuit circuit_from_json(std::string_view text);
std::string circuit_to_json(const Circuit &circuit);

Circuit read_circuit_file(const std::string &path);
void write_circuit_file(const std::string &path, const Circuit &circuit);

}  // namespace lsched
