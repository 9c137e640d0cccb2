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

#include "dcsched/stages.hpp"

namespace dcsched {

namespace {

constexpr std::array<std::string_view, kStageCount> kStageNames = {
    "J1", "J2", "J3", "J4", "J5", "J6", "J7",
    "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10", "T11", "T12",
    "B",  "M1", "M2", "M3", "M4", "M5", "M6",
    "R1", "R2", "R3", "R4", "R5", "R6", "R7",
};

}  // namespace

std::string_view stage_name(StageId stage) {
  return kStageNames[static_cast<int>(stage)];
}

std::optional<StageId> stage_from_name(std::string_view name) {
  for (int i = 0; i < kStageCount; ++i) {
    if (kStageNames[i] == name) {
      return static_cast<StageId>(i);
    }
  }
  return std::nullopt;
}

const std::array<StageId, kStageCount>& stage_catalog() {
  static const std::array<StageId, kStageCount> catalog = [] {
    std::array<StageId, kStageCount> all{};
    for (int i = 0; i < kStageCount; ++i) {
      all[i] = static_cast<StageId>(i);
    }
    return all;
  }();
  return catalog;
}

StageGroup stage_group(StageId stage) {
  int index = static_cast<int>(stage);
  if (index <= static_cast<int>(StageId::J7)) return StageGroup::J;
  if (index <= static_cast<int>(StageId::T12)) return StageGroup::T;
  if (index <= static_cast<int>(StageId::M6)) return StageGroup::M;
  return StageGroup::R;
}

const std::vector<StageId>& group_stages(StageGroup group) {
  static const std::array<std::vector<StageId>, 4> members = [] {
    std::array<std::vector<StageId>, 4> result;
    for (StageId stage : stage_catalog()) {
      result[static_cast<int>(stage_group(stage))].push_back(stage);
    }
    return result;
  }();
  return members[static_cast<int>(group)];
}

std::string_view group_name(StageGroup group) {
  switch (group) {
    case StageGroup::J: return "J";
    case StageGroup::T: return "T";
    case StageGroup::M: return "M";
    case StageGroup::R: return "R";
  }
  return "?";
}

const std::vector<StageId>& stage_order() {
  static const std::vector<StageId> order = {
      StageId::J1, StageId::J2, StageId::J3, StageId::J4, StageId::J5,
      StageId::T1, StageId::T2, StageId::T3, StageId::M1, StageId::M2,
      StageId::R1, StageId::R2, StageId::R3, StageId::R4, StageId::R5,
      StageId::T4,
  };
  return order;
}

}  // namespace dcsched
