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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lsched {

/// Grid coordinate: column x, row y, origin top-left. Orders row-major,
/// i.e. by (y, x).
struct Cell {
    int x = 0;
    int y = 0;

    bool operator==(const Cell &) const = default;
    std::strong_ordering operator<=>(const Cell &o) const {
        if (auto c = y <=> o.y; c != 0) {
            return c;
        }
        return x <=> o.x;
    }
};

/// "x:y"
std::string cell_str(Cell c);

/// Bit-level geometry of a W x H grid.
///
/// Each row occupies `row_words` 64-bit words and always keeps at least one
/// unused bit at its end. Masks never set those padding bits, so a 1-bit
/// shift of the whole array moves cells horizontally without leaking between
/// rows once the result is masked. Word count is padded to a multiple of 4.
class GridShape {
   public:
    GridShape() = default;
    GridShape(int width, int height);

    int width() const {
        return width_;
    }
    int height() const {
        return height_;
    }
    std::size_t row_words() const {
        return row_words_;
    }
    std::size_t words() const {
        return words_;
    }
    std::size_t bits() const {
        return words_ * 64;
    }
    bool contains(Cell c) const {
        return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_;
    }
    std::size_t bit(Cell c) const {
        return static_cast<std::size_t>(c.y) * row_words_ * 64 + static_cast<std::size_t>(c.x);
    }
    Cell cell(std::size_t bit) const {
        std::size_t row_bits = row_words_ * 64;
        return {static_cast<int>(bit % row_bits), static_cast<int>(bit / row_bits)};
    }

    bool operator==(const GridShape &) const = default;

   private:
    int width_ = 0;
    int height_ = 0;
    std::size_t row_words_ = 1;
    std::size_t words_ = 0;
};

/// Cell set over a GridShape, stored with zeroed guard words on both sides so
/// kernels may read one row beyond either end.
class Bitboard {
   public:
    Bitboard() = default;
    explicit Bitboard(const GridShape &shape);

    std::size_t words() const {
        return words_;
    }
    std::uint64_t *data() {
        return storage_.data() + guard_;
    }
    const std::uint64_t *data() const {
        return storage_.data() + guard_;
    }
    std::span<std::uint64_t> span() {
        return {data(), words_};
    }
    std::span<const std::uint64_t> span() const {
        return {data(), words_};
    }

    bool test(std::size_t bit) const {
        return (data()[bit >> 6] >> (bit & 63)) & 1;
    }
    void set(std::size_t bit) {
        data()[bit >> 6] |= std::uint64_t{1} << (bit & 63);
    }
    void reset(std::size_t bit) {
        data()[bit >> 6] &= ~(std::uint64_t{1} << (bit & 63));
    }
    void clear();

    bool any() const;
    std::size_t count() const;
    std::optional<std::size_t> first() const;
    bool intersects(const Bitboard &other) const;

    Bitboard &operator|=(const Bitboard &o);
    Bitboard &operator&=(const Bitboard &o);
    /// this &= ~o
    Bitboard &and_not(const Bitboard &o);

    bool operator==(const Bitboard &o) const;

    /// Calls f(bit) for every set bit in increasing order.
    template <typename F>
    void for_each(F &&f) const {
        const std::uint64_t *d = data();
        for (std::size_t w = 0; w < words_; w++) {
            std::uint64_t v = d[w];
            while (v) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(v)));
                v &= v - 1;
            }
        }
    }

   private:
    std::vector<std::uint64_t> storage_;
    std::size_t guard_ = 0;
    std::size_t words_ = 0;
};

}  // namespace lsched
