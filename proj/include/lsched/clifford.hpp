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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lsched/pauli.hpp"

namespace lsched {

enum class GateKind : std::uint8_t { H, S, Sdg, X, Y, Z, CX, CZ, T, Tdg };

std::string_view gate_name(GateKind kind);
int gate_arity(GateKind kind);
bool is_clifford(GateKind kind);

struct Gate {
    GateKind kind;
    std::array<Qubit, 2> targets{0, 0};

    bool operator==(const Gate &) const = default;
};

struct GateList {
    std::size_t num_qubits = 0;
    std::vector<Gate> gates;
};

/// Parses the line-based gate format:
///
///     qubits 2
///     h 0        # comments run to end of line
///     cx 0 1
///     t 1
///
/// Throws InputError whose message ends with ", line <n>".
GateList parse_gates(std::string_view text);
GateList read_gate_file(const std::string &path);

/// Hermitian Pauli string with a sign. Entries use 0 for identity, otherwise
/// the Pauli enum value.
struct SignedPauliString {
    std::vector<std::uint8_t> ops;
    bool negative = false;

    std::string str() const;  // e.g. "-X_Z"
    bool commutes_with(const SignedPauliString &other) const;
};

/// Tracks the map P -> C^dag P C for the Clifford C accumulated so far.
///
/// With gates appended on the left (C' = G C), each generator's new image is
/// the old image of G^dag P G, so an update only rewrites the one or two
/// rows named by the gate. A pi/8 rotation on Z_q that follows C is the same
/// as C preceded by a rotation on the image of Z_q, which is how Cliffords are
/// pushed to the end of the circuit.
///
/// Sign convention: Y = iXZ, S = diag(1, i). For example S gives
/// X -> -Y and its inverse gives X -> +Y.
class CliffordTableau {
   public:
    static CliffordTableau identity(std::size_t num_qubits);

    std::size_t num_qubits() const {
        return xs_.size();
    }
    const SignedPauliString &x_image(Qubit q) const {
        return xs_[q];
    }
    const SignedPauliString &z_image(Qubit q) const {
        return zs_[q];
    }

    /// Throws ContractViolation for T/Tdg or out-of-range operands.
    void apply(const Gate &gate);

    /// Every X_q/Z_q image pair anticommutes and all other pairs commute.
    bool satisfies_symplectic() const;

   private:
    std::vector<SignedPauliString> xs_;
    std::vector<SignedPauliString> zs_;
};

/// Value-returning form of CliffordTableau::apply.
CliffordTableau apply_clifford(CliffordTableau tableau, const Gate &gate);

/// Lowers Clifford+T to pi/8 products. Each t/tdg on q emits the current
/// image of Z_q; its sign (flipped for tdg) goes to rotation_signs. Trailing
/// Cliffords are dropped.
Circuit transpile(const GateList &gates);

}  // namespace lsched
