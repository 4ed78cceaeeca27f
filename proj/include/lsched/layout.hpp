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
#include <vector>

#include "lsched/grid.hpp"
#include "lsched/pauli.hpp"

namespace lsched {

enum class Arch : std::uint8_t { Bus, PureMagic };

std::string_view arch_name(Arch a);  // "bus" | "pure"
Arch parse_arch(std::string_view name);

enum class CellRole : std::uint8_t {
    Void,        // not part of the layout (corners outside the bus ring)
    Data,        // one half of a double-qubit patch
    Bus,         // routing-only ancilla (bus architecture interior)
    Magic,       // perimeter magic cultivator (bus architecture ring)
    Cultivator,  // pure-magic ancilla: cultivates and routes
};

std::string_view role_name(CellRole r);

/// A 2x1 patch holding qubits 2*id (left cell) and 2*id+1 (right cell).
struct DataDouble {
    int id;
    Qubit lo;
    Qubit hi;
    Cell left;
    Cell right;
};

/// Immutable 2D arrangement of data doubles and ancilla cells.
class Layout {
   public:
    Arch arch() const {
        return arch_;
    }
    int density() const {
        return density_;
    }
    std::size_t num_data_qubits() const {
        return num_data_qubits_;
    }
    int rows() const {
        return rows_;
    }
    int cols() const {
        return cols_;
    }
    int width() const {
        return shape_.width();
    }
    int height() const {
        return shape_.height();
    }
    const GridShape &shape() const {
        return shape_;
    }
    CellRole role(Cell c) const {
        return shape_.contains(c) ? roles_[static_cast<std::size_t>(c.y * width() + c.x)] : CellRole::Void;
    }
    const std::vector<DataDouble> &doubles() const {
        return doubles_;
    }
    /// Double holding qubit q; even qubits sit in the left cell.
    int double_of(Qubit q) const {
        return static_cast<int>(q / 2);
    }

    /// Total cells (data + ancilla + ring): the N of the volume V = N * T.
    std::size_t cell_count() const;
    std::size_t count(CellRole r) const;

    /// Cells routable by the scheduler (Bus or Cultivator roles).
    const Bitboard &interior_ancilla() const {
        return interior_ancilla_;
    }
    /// Cells able to cultivate magic (Magic ring for bus, Cultivator for pure).
    const Bitboard &magic_capable() const {
        return magic_capable_;
    }
    const Bitboard &ring() const {
        return ring_;
    }

    friend Layout generate_layout(std::size_t num_data_qubits, Arch arch, int density);

   private:
    Arch arch_ = Arch::PureMagic;
    int density_ = 1;
    std::size_t num_data_qubits_ = 0;
    int rows_ = 0;
    int cols_ = 0;
    GridShape shape_;
    std::vector<CellRole> roles_;
    std::vector<DataDouble> doubles_;
    Bitboard interior_ancilla_;
    Bitboard magic_capable_;
    Bitboard ring_;
};

/// Builds a layout for L data qubits.
///
/// ceil(L/2) doubles go on an r x c grid separated by `density` ancilla
/// lanes, so the interior is w = c(2+s)+s by h = r(1+s)+s. (r, c) minimises
/// w*h, then |w-h|, then r. Doubles fill row-major. The bus architecture adds
/// a ring of 2(w+h) magic cells around the interior (corners excluded) and
/// shifts the interior by one cell; pure magic makes every interior ancilla a
/// cultivator.
Layout generate_layout(std::size_t num_data_qubits, Arch arch, int density);

/// Total cells of a layout; same as layout.cell_count().
inline std::size_t layout_cell_count(const Layout &layout) {
    return layout.cell_count();
}

/// Deterministic JSON dump for visualisation tools.
std::string layout_to_json(const Layout &layout);

enum class AccessMode : std::uint8_t {
    SideLeft,      // one qubit, through the cell left of the double
    SideRight,     // one qubit, through the cell right of the double
    Top,           // ZZ through both cells above
    Bottom,        // XX through both cells below
    TopAndBottom,  // YY through all four
    BothSides,     // mixed pair (or any pair without horizontal edges)
};

std::string_view access_mode_name(AccessMode m);

struct AccessSpec {
    int double_id;
    AccessMode mode;
    std::vector<Cell> cells;  // mandatory adjacent ancilla cells, row-major order
};

struct AccessRules {
    bool allow_horizontal_edges = true;
    /// Reject products that need both sides of one double.
    bool strict_single_side = false;
};

/// For each double the product touches (in double order), the admissible
/// access modes. An empty inner list means the product cannot reach that
/// double under `rules`. Throws InputError for qubits beyond the layout.
std::vector<std::vector<AccessSpec>> access_options(
    const Layout &layout, const PauliProduct &product, const AccessRules &rules = {});

}  // namespace lsched
