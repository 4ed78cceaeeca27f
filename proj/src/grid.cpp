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

#include "lsched/grid.hpp"

#include <algorithm>

#include "lsched/common.hpp"

namespace lsched {

std::string cell_str(Cell c) {
    return std::to_string(c.x) + ":" + std::to_string(c.y);
}

GridShape::GridShape(int width, int height) : width_(width), height_(height) {
    if (width < 1 || height < 1) {
        throw ContractViolation("grid dimensions must be positive");
    }
    row_words_ = static_cast<std::size_t>(width) / 64 + 1;
    std::size_t used = row_words_ * static_cast<std::size_t>(height);
    words_ = (used + 3) & ~std::size_t{3};
}

Bitboard::Bitboard(const GridShape &shape)
    : storage_(shape.words() + 2 * shape.row_words() + 2, 0), guard_(shape.row_words() + 1), words_(shape.words()) {
}

void Bitboard::clear() {
    std::fill(storage_.begin(), storage_.end(), 0);
}

bool Bitboard::any() const {
    const std::uint64_t *d = data();
    for (std::size_t w = 0; w < words_; w++) {
        if (d[w]) {
            return true;
        }
    }
    return false;
}

std::size_t Bitboard::count() const {
    std::size_t n = 0;
    const std::uint64_t *d = data();
    for (std::size_t w = 0; w < words_; w++) {
        n += static_cast<std::size_t>(std::popcount(d[w]));
    }
    return n;
}

std::optional<std::size_t> Bitboard::first() const {
    const std::uint64_t *d = data();
    for (std::size_t w = 0; w < words_; w++) {
        if (d[w]) {
            return w * 64 + static_cast<std::size_t>(std::countr_zero(d[w]));
        }
    }
    return std::nullopt;
}

bool Bitboard::intersects(const Bitboard &other) const {
    const std::uint64_t *a = data();
    const std::uint64_t *b = other.data();
    for (std::size_t w = 0; w < words_; w++) {
        if (a[w] & b[w]) {
            return true;
        }
    }
    return false;
}

Bitboard &Bitboard::operator|=(const Bitboard &o) {
    std::uint64_t *a = data();
    const std::uint64_t *b = o.data();
    for (std::size_t w = 0; w < words_; w++) {
        a[w] |= b[w];
    }
    return *this;
}

Bitboard &Bitboard::operator&=(const Bitboard &o) {
    std::uint64_t *a = data();
    const std::uint64_t *b = o.data();
    for (std::size_t w = 0; w < words_; w++) {
        a[w] &= b[w];
    }
    return *this;
}

Bitboard &Bitboard::and_not(const Bitboard &o) {
    std::uint64_t *a = data();
    const std::uint64_t *b = o.data();
    for (std::size_t w = 0; w < words_; w++) {
        a[w] &= ~b[w];
    }
    return *this;
}

bool Bitboard::operator==(const Bitboard &o) const {
    return words_ == o.words_ && std::equal(data(), data() + words_, o.data());
}

}  // namespace lsched
