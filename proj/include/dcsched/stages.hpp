// Copyright (c) The dcsched Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace dcsched {

// The 33 stages of the scheduling architecture: job processing (J),
// task processing (T), scheduler management (B + M), and resource
// management (R). Enumerator order is the catalog order used for mapping
// data columns and for deterministic tie-breaking.
enum class StageId : int {
  J1, J2, J3, J4, J5, J6, J7,
  T1, T2, T3, T4, T5, T6, T7, T8, T9, T10, T11, T12,
  B, M1, M2, M3, M4, M5, M6,
  R1, R2, R3, R4, R5, R6, R7,
};

inline constexpr int kStageCount = 33;

enum class StageGroup { J, T, M, R };

std::string_view stage_name(StageId stage);
std::optional<StageId> stage_from_name(std::string_view name);

// All 33 stages in catalog order.
const std::array<StageId, kStageCount>& stage_catalog();

// Group membership; the broker (B) belongs to the scheduler-management
// group.
StageGroup stage_group(StageId stage);
const std::vector<StageId>& group_stages(StageGroup group);
std::string_view group_name(StageGroup group);

// The fixed placement-path order of one scheduling cycle, J1 through T4.
// Stage-timing rows are emitted in this order.
const std::vector<StageId>& stage_order();

}  // namespace dcsched
