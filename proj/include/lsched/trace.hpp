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

#include <string>
#include <string_view>
#include <vector>

#include "lsched/scheduler.hpp"

namespace lsched {

/// CSV with header `cycle,product,weight,magic_cell,cells`; cells are `x:y`
/// joined by `|` in row-major order. One row per placement, in result order.
std::string trace_to_csv(const std::vector<Placement> &placements);

/// Inverse of trace_to_csv. Throws InputError naming the offending line.
std::vector<Placement> trace_from_csv(std::string_view text);

}  // namespace lsched
