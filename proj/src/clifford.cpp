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

#include "lsched/clifford.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "lsched/common.hpp"

namespace lsched {

namespace {

struct GateInfo {
    std::string_view name;
    GateKind kind;
    int arity;
};

constexpr GateInfo kGates[] = {
    {"h", GateKind::H, 1},   {"s", GateKind::S, 1},   {"sdg", GateKind::Sdg, 1},
    {"x", GateKind::X, 1},   {"y", GateKind::Y, 1},   {"z", GateKind::Z, 1},
    {"cx", GateKind::CX, 2}, {"cz", GateKind::CZ, 2}, {"t", GateKind::T, 1},
    {"tdg", GateKind::Tdg, 1},
};

const GateInfo &info(GateKind kind) {
    for (const auto &g : kGates) {
        if (g.kind == kind) {
            return g;
        }
    }
    throw ContractViolation("unknown gate kind");
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            i++;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            j++;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

bool parse_index(std::string_view tok, std::size_t &out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

[[noreturn]] void fail(const std::string &msg, std::size_t line) {
    throw InputError(msg + ", line " + std::to_string(line));
}

// Encoding used inside the row algebra: bit 0 = x, bit 1 = z.
constexpr std::uint8_t kXZ[4] = {0, 1, 3, 2};  // Pauli enum value (I,X,Y,Z) -> xz bits
constexpr std::uint8_t kFromXZ[4] = {0, 1, 3, 2};

// Power of i picked up by a single-qubit product a*b, with a, b in xz bits.
int product_phase(std::uint8_t a, std::uint8_t b) {
    if (a == 0 || b == 0 || a == b) {
        return 0;
    }
    // X*Y = iZ, Y*Z = iX, Z*X = iY; reversed orders give -i.
    auto cyc = [](std::uint8_t v) {
        return v == 1 ? 0 : v == 3 ? 1 : 2;  // X, Y, Z
    };
    int d = (cyc(b) - cyc(a) + 3) % 3;
    return d == 1 ? 1 : 3;
}

/// Returns i^extra_phase * a * b. The result must be Hermitian.
SignedPauliString multiply(const SignedPauliString &a, const SignedPauliString &b, int extra_phase) {
    SignedPauliString out;
    out.ops.resize(a.ops.size());
    int phase = extra_phase + (a.negative ? 2 : 0) + (b.negative ? 2 : 0);
    for (std::size_t k = 0; k < a.ops.size(); k++) {
        std::uint8_t xa = kXZ[a.ops[k]];
        std::uint8_t xb = kXZ[b.ops[k]];
        phase += product_phase(xa, xb);
        out.ops[k] = kFromXZ[xa ^ xb];
    }
    phase &= 3;
    if (phase & 1) {
        throw ContractViolation("non-Hermitian product while updating Clifford tableau");
    }
    out.negative = phase == 2;
    return out;
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    return info(kind).name;
}

int gate_arity(GateKind kind) {
    return info(kind).arity;
}

bool is_clifford(GateKind kind) {
    return kind != GateKind::T && kind != GateKind::Tdg;
}

GateList parse_gates(std::string_view text) {
    GateList out;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;

        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto toks = split_ws(line);
        if (toks.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }

        if (!have_header) {
            std::size_t n = 0;
            if (toks[0] != "qubits" || toks.size() != 2 || !parse_index(toks[1], n)) {
                fail("expected header 'qubits <n>'", line_no);
            }
            out.num_qubits = n;
            have_header = true;
            continue;
        }

        const GateInfo *g = nullptr;
        for (const auto &cand : kGates) {
            if (cand.name == toks[0]) {
                g = &cand;
            }
        }
        if (g == nullptr) {
            fail("unknown gate '" + std::string(toks[0]) + "'", line_no);
        }
        if (toks.size() != static_cast<std::size_t>(g->arity) + 1) {
            fail("gate '" + std::string(g->name) + "' takes " + std::to_string(g->arity) + " operand(s)", line_no);
        }
        Gate gate{g->kind, {0, 0}};
        for (int k = 0; k < g->arity; k++) {
            std::size_t q = 0;
            if (!parse_index(toks[k + 1], q)) {
                fail("bad qubit index '" + std::string(toks[k + 1]) + "'", line_no);
            }
            if (q >= out.num_qubits) {
                fail("qubit index out of range", line_no);
            }
            gate.targets[k] = static_cast<Qubit>(q);
        }
        if (g->arity == 2 && gate.targets[0] == gate.targets[1]) {
            fail("two-qubit gate needs distinct operands", line_no);
        }
        out.gates.push_back(gate);
        if (end == text.size()) {
            break;
        }
    }
    if (!have_header) {
        fail("missing header 'qubits <n>'", line_no);
    }
    return out;
}

GateList read_gate_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open gate file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_gates(ss.str());
}

std::string SignedPauliString::str() const {
    std::string out(1, negative ? '-' : '+');
    for (auto v : ops) {
        out.push_back(v == 0 ? '_' : pauli_char(static_cast<Pauli>(v)));
    }
    return out;
}

bool SignedPauliString::commutes_with(const SignedPauliString &other) const {
    int anti = 0;
    for (std::size_t k = 0; k < ops.size(); k++) {
        if (ops[k] != 0 && other.ops[k] != 0 && ops[k] != other.ops[k]) {
            anti ^= 1;
        }
    }
    return anti == 0;
}

CliffordTableau CliffordTableau::identity(std::size_t num_qubits) {
    CliffordTableau t;
    t.xs_.resize(num_qubits);
    t.zs_.resize(num_qubits);
    for (std::size_t q = 0; q < num_qubits; q++) {
        t.xs_[q].ops.assign(num_qubits, 0);
        t.zs_[q].ops.assign(num_qubits, 0);
        t.xs_[q].ops[q] = static_cast<std::uint8_t>(Pauli::X);
        t.zs_[q].ops[q] = static_cast<std::uint8_t>(Pauli::Z);
    }
    return t;
}

void CliffordTableau::apply(const Gate &gate) {
    if (!is_clifford(gate.kind)) {
        throw ContractViolation("CliffordTableau::apply called with a non-Clifford gate");
    }
    int arity = gate_arity(gate.kind);
    for (int k = 0; k < arity; k++) {
        if (gate.targets[k] >= num_qubits()) {
            throw ContractViolation("gate operand out of range for tableau");
        }
    }
    Qubit a = gate.targets[0];
    Qubit b = gate.targets[1];
    switch (gate.kind) {
        case GateKind::H:
            std::swap(xs_[a], zs_[a]);
            break;
        case GateKind::S:
            // S^dag X S = -Y = -i X Z
            xs_[a] = multiply(xs_[a], zs_[a], 3);
            break;
        case GateKind::Sdg:
            // S X S^dag = Y = i X Z
            xs_[a] = multiply(xs_[a], zs_[a], 1);
            break;
        case GateKind::X:
            zs_[a].negative ^= true;
            break;
        case GateKind::Y:
            xs_[a].negative ^= true;
            zs_[a].negative ^= true;
            break;
        case GateKind::Z:
            xs_[a].negative ^= true;
            break;
        case GateKind::CX:
            if (a == b) {
                throw ContractViolation("cx operands must differ");
            }
            xs_[a] = multiply(xs_[a], xs_[b], 0);
            zs_[b] = multiply(zs_[a], zs_[b], 0);
            break;
        case GateKind::CZ:
            if (a == b) {
                throw ContractViolation("cz operands must differ");
            }
            xs_[a] = multiply(xs_[a], zs_[b], 0);
            xs_[b] = multiply(zs_[a], xs_[b], 0);
            break;
        case GateKind::T:
        case GateKind::Tdg:
            break;
    }
}

bool CliffordTableau::satisfies_symplectic() const {
    std::size_t n = num_qubits();
    for (std::size_t i = 0; i < n; i++) {
        if (xs_[i].commutes_with(zs_[i])) {
            return false;
        }
        for (std::size_t j = i + 1; j < n; j++) {
            if (!xs_[i].commutes_with(xs_[j]) || !xs_[i].commutes_with(zs_[j]) || !zs_[i].commutes_with(xs_[j]) ||
                !zs_[i].commutes_with(zs_[j])) {
                return false;
            }
        }
    }
    return true;
}

CliffordTableau apply_clifford(CliffordTableau tableau, const Gate &gate) {
    tableau.apply(gate);
    return tableau;
}

Circuit transpile(const GateList &gates) {
    Circuit out;
    out.num_qubits = gates.num_qubits;
    auto tableau = CliffordTableau::identity(gates.num_qubits);
    for (const auto &g : gates.gates) {
        if (is_clifford(g.kind)) {
            tableau.apply(g);
            continue;
        }
        const auto &image = tableau.z_image(g.targets[0]);
        std::vector<PauliTerm> terms;
        for (std::size_t q = 0; q < image.ops.size(); q++) {
            if (image.ops[q] != 0) {
                terms.push_back({static_cast<Qubit>(q), static_cast<Pauli>(image.ops[q])});
            }
        }
        bool negative = image.negative ^ (g.kind == GateKind::Tdg);
        out.products.emplace_back(std::move(terms), out.products.size());
        out.rotation_signs.push_back(negative ? -1 : 1);
    }
    return out;
}

}  // namespace lsched
