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

#include "lsched/layout.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "json.hpp"
#include "lsched/common.hpp"

namespace lsched {

std::string_view arch_name(Arch a) {
    return a == Arch::Bus ? "bus" : "pure";
}

Arch parse_arch(std::string_view name) {
    if (name == "bus") {
        return Arch::Bus;
    }
    if (name == "pure" || name == "pure-magic" || name == "puremagic") {
        return Arch::PureMagic;
    }
    throw InputError("unknown architecture '" + std::string(name) + "' (expected bus or pure)");
}

std::string_view role_name(CellRole r) {
    switch (r) {
        case CellRole::Void:
            return "void";
        case CellRole::Data:
            return "data";
        case CellRole::Bus:
            return "bus";
        case CellRole::Magic:
            return "magic";
        case CellRole::Cultivator:
            return "cultivator";
    }
    return "?";
}

std::string_view access_mode_name(AccessMode m) {
    switch (m) {
        case AccessMode::SideLeft:
            return "side-left";
        case AccessMode::SideRight:
            return "side-right";
        case AccessMode::Top:
            return "top";
        case AccessMode::Bottom:
            return "bottom";
        case AccessMode::TopAndBottom:
            return "top+bottom";
        case AccessMode::BothSides:
            return "both-sides";
    }
    return "?";
}

std::size_t Layout::cell_count() const {
    return roles_.size() - count(CellRole::Void);
}

std::size_t Layout::count(CellRole r) const {
    return static_cast<std::size_t>(std::count(roles_.begin(), roles_.end(), r));
}

Layout generate_layout(std::size_t num_data_qubits, Arch arch, int density) {
    if (num_data_qubits < 1) {
        throw ContractViolation("a layout needs at least one data qubit");
    }
    if (density < 1) {
        throw ContractViolation("layout density must be at least 1");
    }
    const long s = density;
    const long doubles = static_cast<long>((num_data_qubits + 1) / 2);

    long best_r = 0, best_c = 0, best_w = 0, best_h = 0;
    std::tuple<long, long, long> best_key{-1, 0, 0};
    for (long r = 1; r <= doubles; r++) {
        long c = (doubles + r - 1) / r;
        long w = c * (2 + s) + s;
        long h = r * (1 + s) + s;
        std::tuple<long, long, long> key{w * h, std::labs(w - h), r};
        if (std::get<0>(best_key) < 0 || key < best_key) {
            best_key = key;
            best_r = r;
            best_c = c;
            best_w = w;
            best_h = h;
        }
    }

    const int ring = arch == Arch::Bus ? 1 : 0;
    Layout out;
    out.arch_ = arch;
    out.density_ = density;
    out.num_data_qubits_ = num_data_qubits;
    out.rows_ = static_cast<int>(best_r);
    out.cols_ = static_cast<int>(best_c);
    out.shape_ = GridShape(static_cast<int>(best_w) + 2 * ring, static_cast<int>(best_h) + 2 * ring);
    const int W = out.shape_.width();
    const int H = out.shape_.height();
    out.roles_.assign(static_cast<std::size_t>(W * H), CellRole::Void);
    auto at = [&](int x, int y) -> CellRole & {
        return out.roles_[static_cast<std::size_t>(y * W + x)];
    };

    const CellRole interior_role = arch == Arch::Bus ? CellRole::Bus : CellRole::Cultivator;
    for (int y = ring; y < H - ring; y++) {
        for (int x = ring; x < W - ring; x++) {
            at(x, y) = interior_role;
        }
    }
    if (ring) {
        for (int x = 1; x < W - 1; x++) {
            at(x, 0) = CellRole::Magic;
            at(x, H - 1) = CellRole::Magic;
        }
        for (int y = 1; y < H - 1; y++) {
            at(0, y) = CellRole::Magic;
            at(W - 1, y) = CellRole::Magic;
        }
    }

    for (long k = 0; k < doubles; k++) {
        long i = k / best_c;
        long j = k % best_c;
        int x = static_cast<int>(s + j * (2 + s)) + ring;
        int y = static_cast<int>(s + i * (1 + s)) + ring;
        DataDouble d{static_cast<int>(k), static_cast<Qubit>(2 * k), static_cast<Qubit>(2 * k + 1), {x, y}, {x + 1, y}};
        at(x, y) = CellRole::Data;
        at(x + 1, y) = CellRole::Data;
        out.doubles_.push_back(d);
    }

    out.interior_ancilla_ = Bitboard(out.shape_);
    out.magic_capable_ = Bitboard(out.shape_);
    out.ring_ = Bitboard(out.shape_);
    for (int y = 0; y < H; y++) {
        for (int x = 0; x < W; x++) {
            std::size_t b = out.shape_.bit({x, y});
            switch (at(x, y)) {
                case CellRole::Bus:
                    out.interior_ancilla_.set(b);
                    break;
                case CellRole::Cultivator:
                    out.interior_ancilla_.set(b);
                    out.magic_capable_.set(b);
                    break;
                case CellRole::Magic:
                    out.ring_.set(b);
                    out.magic_capable_.set(b);
                    break;
                default:
                    break;
            }
        }
    }
    return out;
}

std::string layout_to_json(const Layout &layout) {
    nlohmann::ordered_json doc;
    doc["arch"] = std::string(arch_name(layout.arch()));
    doc["width"] = layout.width();
    doc["height"] = layout.height();
    std::vector<int> double_at(static_cast<std::size_t>(layout.width() * layout.height()), -1);
    for (const auto &d : layout.doubles()) {
        double_at[static_cast<std::size_t>(d.left.y * layout.width() + d.left.x)] = d.id;
        double_at[static_cast<std::size_t>(d.right.y * layout.width() + d.right.x)] = d.id;
    }
    auto cells = nlohmann::ordered_json::array();
    for (int y = 0; y < layout.height(); y++) {
        for (int x = 0; x < layout.width(); x++) {
            CellRole r = layout.role({x, y});
            if (r == CellRole::Void) {
                continue;
            }
            nlohmann::ordered_json c;
            c["x"] = x;
            c["y"] = y;
            c["kind"] = r == CellRole::Data ? "data" : "ancilla";
            c["role"] = std::string(role_name(r));
            if (r == CellRole::Data) {
                c["double_id"] = double_at[static_cast<std::size_t>(y * layout.width() + x)];
            }
            cells.push_back(std::move(c));
        }
    }
    doc["cells"] = std::move(cells);
    return doc.dump() + "\n";
}

namespace {

AccessSpec make_spec(const DataDouble &d, AccessMode mode) {
    Cell l = d.left;
    Cell r = d.right;
    std::vector<Cell> cells;
    switch (mode) {
        case AccessMode::SideLeft:
            cells = {{l.x - 1, l.y}};
            break;
        case AccessMode::SideRight:
            cells = {{r.x + 1, r.y}};
            break;
        case AccessMode::Top:
            cells = {{l.x, l.y - 1}, {r.x, r.y - 1}};
            break;
        case AccessMode::Bottom:
            cells = {{l.x, l.y + 1}, {r.x, r.y + 1}};
            break;
        case AccessMode::TopAndBottom:
            cells = {{l.x, l.y - 1}, {r.x, r.y - 1}, {l.x, l.y + 1}, {r.x, r.y + 1}};
            break;
        case AccessMode::BothSides:
            cells = {{l.x - 1, l.y}, {r.x + 1, r.y}};
            break;
    }
    std::sort(cells.begin(), cells.end());
    return {d.id, mode, std::move(cells)};
}

}  // namespace

std::vector<std::vector<AccessSpec>> access_options(
    const Layout &layout, const PauliProduct &product, const AccessRules &rules) {
    std::vector<std::vector<AccessSpec>> out;
    const auto &terms = product.terms();
    for (std::size_t i = 0; i < terms.size(); i++) {
        Qubit q = terms[i].qubit;
        if (q >= layout.num_data_qubits()) {
            throw InputError(
                "product " + std::to_string(product.seq()) + " uses qubit " + std::to_string(q) +
                " outside a layout of " + std::to_string(layout.num_data_qubits()) + " data qubits");
        }
        const DataDouble &d = layout.doubles()[static_cast<std::size_t>(layout.double_of(q))];
        // Terms are sorted, so a double's partner (if present) is the next term.
        bool pair = q == d.lo && i + 1 < terms.size() && terms[i + 1].qubit == d.hi;
        std::vector<AccessSpec> opts;
        if (!pair) {
            opts.push_back(make_spec(d, q == d.lo ? AccessMode::SideLeft : AccessMode::SideRight));
        } else {
            Pauli a = terms[i].op;
            Pauli b = terms[i + 1].op;
            i++;
            if (a == b && rules.allow_horizontal_edges) {
                AccessMode m = a == Pauli::X ? AccessMode::Bottom
                             : a == Pauli::Z ? AccessMode::Top
                                             : AccessMode::TopAndBottom;
                opts.push_back(make_spec(d, m));
            } else if (!rules.strict_single_side) {
                opts.push_back(make_spec(d, AccessMode::BothSides));
            }
        }
        out.push_back(std::move(opts));
    }
    return out;
}

}  // namespace lsched
