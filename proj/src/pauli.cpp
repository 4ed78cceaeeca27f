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

#include "lsched/pauli.hpp"

#include <algorithm>
#include <charconv>

#include "lsched/common.hpp"

namespace lsched {

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::X:
            return 'X';
        case Pauli::Y:
            return 'Y';
        case Pauli::Z:
            return 'Z';
    }
    return '?';
}

PauliProduct::PauliProduct(std::vector<PauliTerm> terms, std::size_t seq) : terms_(std::move(terms)), seq_(seq) {
    if (terms_.empty()) {
        throw ContractViolation("a Pauli product needs at least one non-identity term");
    }
    std::sort(terms_.begin(), terms_.end(), [](const PauliTerm &a, const PauliTerm &b) {
        return a.qubit < b.qubit;
    });
    for (std::size_t i = 1; i < terms_.size(); i++) {
        if (terms_[i].qubit == terms_[i - 1].qubit) {
            throw ContractViolation("qubit " + std::to_string(terms_[i].qubit) + " repeated in Pauli product");
        }
    }
}

PauliProduct PauliProduct::parse(std::string_view text, std::size_t seq) {
    std::vector<PauliTerm> terms;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            pos++;
            continue;
        }
        std::size_t end = text.find(' ', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view tok = text.substr(pos, end - pos);
        pos = end;

        Pauli op;
        switch (tok[0]) {
            case 'X':
                op = Pauli::X;
                break;
            case 'Y':
                op = Pauli::Y;
                break;
            case 'Z':
                op = Pauli::Z;
                break;
            default:
                throw InputError("bad Pauli token '" + std::string(tok) + "'");
        }
        std::string_view digits = tok.substr(1);
        Qubit q = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
        if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
            throw InputError("bad qubit index in Pauli token '" + std::string(tok) + "'");
        }
        terms.push_back({q, op});
    }
    if (terms.empty()) {
        throw InputError("empty Pauli product");
    }
    try {
        return PauliProduct(std::move(terms), seq);
    } catch (const ContractViolation &ex) {
        throw InputError(ex.what());
    }
}

std::string PauliProduct::str() const {
    std::string out;
    for (const auto &t : terms_) {
        if (!out.empty()) {
            out.push_back(' ');
        }
        out.push_back(pauli_char(t.op));
        out += std::to_string(t.qubit);
    }
    return out;
}

bool PauliProduct::find(Qubit q, Pauli *out) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), q, [](const PauliTerm &t, Qubit v) {
        return t.qubit < v;
    });
    if (it == terms_.end() || it->qubit != q) {
        return false;
    }
    if (out != nullptr) {
        *out = it->op;
    }
    return true;
}

void Circuit::validate() const {
    for (std::size_t i = 0; i < products.size(); i++) {
        const auto &p = products[i];
        if (p.seq() != i) {
            throw InputError("product " + std::to_string(i) + " has sequence index " + std::to_string(p.seq()));
        }
        if (p.max_qubit() >= num_qubits) {
            throw InputError(
                "product " + std::to_string(i) + " touches qubit " + std::to_string(p.max_qubit()) +
                " but the circuit has " + std::to_string(num_qubits) + " qubits");
        }
    }
    if (!rotation_signs.empty() && rotation_signs.size() != products.size()) {
        throw InputError("rotation sign annotation length does not match product count");
    }
}

}  // namespace lsched
