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

#include "lsched/trace.hpp"

#include <charconv>
#include <sstream>

#include "lsched/common.hpp"

namespace lsched {

namespace {

constexpr std::string_view kHeader = "cycle,product,weight,magic_cell,cells";

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t k = s.find(sep, start);
        if (k == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, k - start));
        start = k + 1;
    }
}

template <typename T>
T parse_number(std::string_view s, std::size_t line) {
    T v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
        throw InputError("bad number '" + std::string(s) + "' in trace, line " + std::to_string(line));
    }
    return v;
}

Cell parse_cell(std::string_view s, std::size_t line) {
    auto parts = split(s, ':');
    if (parts.size() != 2) {
        throw InputError("bad cell '" + std::string(s) + "' in trace, line " + std::to_string(line));
    }
    return {parse_number<int>(parts[0], line), parse_number<int>(parts[1], line)};
}

}  // namespace

std::string trace_to_csv(const std::vector<Placement> &placements) {
    std::ostringstream out;
    out << kHeader << '\n';
    for (const Placement &p : placements) {
        out << p.cycle << ',' << p.product << ',' << p.tree.weight << ',' << cell_str(p.tree.magic_cell) << ',';
        for (std::size_t i = 0; i < p.tree.cells.size(); i++) {
            if (i) {
                out << '|';
            }
            out << cell_str(p.tree.cells[i]);
        }
        out << '\n';
    }
    return out.str();
}

std::vector<Placement> trace_from_csv(std::string_view text) {
    std::vector<Placement> out;
    auto lines = split(text, '\n');
    if (lines.empty() || lines[0] != kHeader) {
        throw InputError("trace must start with the header '" + std::string(kHeader) + "'");
    }
    for (std::size_t i = 1; i < lines.size(); i++) {
        std::string_view line = lines[i];
        if (line.empty()) {
            continue;
        }
        auto fields = split(line, ',');
        if (fields.size() != 5) {
            throw InputError("expected 5 fields in trace, line " + std::to_string(i + 1));
        }
        Placement p;
        p.cycle = parse_number<int>(fields[0], i + 1);
        p.product = parse_number<std::uint32_t>(fields[1], i + 1);
        p.tree.weight = parse_number<int>(fields[2], i + 1);
        p.tree.magic_cell = parse_cell(fields[3], i + 1);
        for (std::string_view c : split(fields[4], '|')) {
            p.tree.cells.push_back(parse_cell(c, i + 1));
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace lsched
