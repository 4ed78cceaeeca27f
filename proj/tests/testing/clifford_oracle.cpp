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

#include "clifford_oracle.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace lsched::testing {

namespace {

using cd = std::complex<double>;
using Mat2 = std::array<std::array<cd, 2>, 2>;
using Mat4 = std::array<std::array<cd, 4>, 4>;

const cd I{0, 1};

Mat2 single(GateKind k) {
    const double r = 1 / std::sqrt(2.0);
    switch (k) {
        case GateKind::H:
            return {{{r, r}, {r, -r}}};
        case GateKind::S:
            return {{{1, 0}, {0, I}}};
        case GateKind::Sdg:
            return {{{1, 0}, {0, -I}}};
        case GateKind::X:
            return {{{0, 1}, {1, 0}}};
        case GateKind::Y:
            return {{{0, -I}, {I, 0}}};
        case GateKind::Z:
            return {{{1, 0}, {0, -1}}};
        default:
            throw std::invalid_argument("not a single-qubit Clifford");
    }
}

// Local index = bit(q0) + 2 * bit(q1), with q0 the first operand.
Mat4 two(GateKind k) {
    Mat4 m{};
    if (k == GateKind::CX) {
        // control q0, target q1
        m[0][0] = 1;
        m[3][1] = 1;
        m[2][2] = 1;
        m[1][3] = 1;
    } else if (k == GateKind::CZ) {
        m[0][0] = 1;
        m[1][1] = 1;
        m[2][2] = 1;
        m[3][3] = -1;
    } else {
        throw std::invalid_argument("not a two-qubit Clifford");
    }
    return m;
}

template <std::size_t K>
void conjugate_local(
    DenseMatrix &m,
    const std::array<std::array<cd, K>, K> &g,
    const std::array<std::size_t, K == 2 ? 1 : 2> &qubits) {
    const std::size_t d = m.dim;
    auto local_index = [&](std::size_t base, std::size_t j) {
        std::size_t idx = base;
        for (std::size_t b = 0; b < qubits.size(); b++) {
            if ((j >> b) & 1) {
                idx |= std::size_t{1} << qubits[b];
            }
        }
        return idx;
    };
    std::size_t mask = 0;
    for (std::size_t q : qubits) {
        mask |= std::size_t{1} << q;
    }
    // M <- M G (columns).
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t base = 0; base < d; base++) {
            if (base & mask) {
                continue;
            }
            std::array<cd, K> in{};
            for (std::size_t j = 0; j < K; j++) {
                in[j] = m.at(r, local_index(base, j));
            }
            for (std::size_t j = 0; j < K; j++) {
                cd s = 0;
                for (std::size_t i = 0; i < K; i++) {
                    s += in[i] * g[i][j];
                }
                m.at(r, local_index(base, j)) = s;
            }
        }
    }
    // M <- G^dag M (rows).
    for (std::size_t c = 0; c < d; c++) {
        for (std::size_t base = 0; base < d; base++) {
            if (base & mask) {
                continue;
            }
            std::array<cd, K> in{};
            for (std::size_t j = 0; j < K; j++) {
                in[j] = m.at(local_index(base, j), c);
            }
            for (std::size_t i = 0; i < K; i++) {
                cd s = 0;
                for (std::size_t j = 0; j < K; j++) {
                    s += std::conj(g[j][i]) * in[j];
                }
                m.at(local_index(base, i), c) = s;
            }
        }
    }
}

}  // namespace

DenseMatrix pauli_matrix(const SignedPauliString &p) {
    const std::size_t n = p.ops.size();
    DenseMatrix m;
    m.dim = std::size_t{1} << n;
    m.a.assign(m.dim * m.dim, 0);
    for (std::size_t c = 0; c < m.dim; c++) {
        std::size_t r = c;
        cd v = p.negative ? -1 : 1;
        for (std::size_t q = 0; q < n; q++) {
            bool bit = (c >> q) & 1;
            switch (p.ops[q]) {
                case 0:
                    break;
                case static_cast<std::uint8_t>(Pauli::X):
                    r ^= std::size_t{1} << q;
                    break;
                case static_cast<std::uint8_t>(Pauli::Y):
                    r ^= std::size_t{1} << q;
                    v *= bit ? -I : I;
                    break;
                case static_cast<std::uint8_t>(Pauli::Z):
                    v *= bit ? -1.0 : 1.0;
                    break;
            }
        }
        m.at(r, c) = v;
    }
    return m;
}

void conjugate_by_gate(DenseMatrix &m, const Gate &g) {
    if (gate_arity(g.kind) == 1) {
        conjugate_local<2>(m, single(g.kind), {g.targets[0]});
    } else {
        conjugate_local<4>(m, two(g.kind), {g.targets[0], g.targets[1]});
    }
}

DenseMatrix dense_conjugate(const std::vector<Gate> &gates, const SignedPauliString &p) {
    if (p.ops.size() > 10) {
        throw std::invalid_argument("dense oracle limited to 10 qubits");
    }
    DenseMatrix m = pauli_matrix(p);
    for (std::size_t k = gates.size(); k-- > 0;) {
        conjugate_by_gate(m, gates[k]);
    }
    return m;
}

bool decompose_pauli(const DenseMatrix &m, std::size_t num_qubits, SignedPauliString *out) {
    if (m.dim != (std::size_t{1} << num_qubits)) {
        return false;
    }
    // Column 0 has a single nonzero entry at row x: the X part.
    std::size_t x = m.dim;
    for (std::size_t r = 0; r < m.dim; r++) {
        if (std::abs(m.at(r, 0)) > 0.5) {
            x = r;
            break;
        }
    }
    if (x == m.dim) {
        return false;
    }
    // The Z part from the sign change of column e_q relative to column 0.
    std::size_t z = 0;
    for (std::size_t q = 0; q < num_qubits; q++) {
        std::size_t c = std::size_t{1} << q;
        cd ratio = m.at(x ^ c, c) / m.at(x, 0);
        if (std::abs(ratio + 1.0) < 1e-6) {
            z |= c;
        } else if (std::abs(ratio - 1.0) > 1e-6) {
            return false;
        }
    }
    SignedPauliString p;
    p.ops.assign(num_qubits, 0);
    for (std::size_t q = 0; q < num_qubits; q++) {
        bool xb = (x >> q) & 1;
        bool zb = (z >> q) & 1;
        p.ops[q] = xb && zb ? static_cast<std::uint8_t>(Pauli::Y)
                 : xb       ? static_cast<std::uint8_t>(Pauli::X)
                 : zb       ? static_cast<std::uint8_t>(Pauli::Z)
                            : 0;
    }
    DenseMatrix plus = pauli_matrix(p);
    bool eq_plus = true;
    bool eq_minus = true;
    for (std::size_t i = 0; i < m.a.size(); i++) {
        eq_plus = eq_plus && std::abs(m.a[i] - plus.a[i]) < 1e-6;
        eq_minus = eq_minus && std::abs(m.a[i] + plus.a[i]) < 1e-6;
    }
    if (!eq_plus && !eq_minus) {
        return false;
    }
    p.negative = !eq_plus;
    *out = p;
    return true;
}

}  // namespace lsched::testing
