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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dcsched/stages.hpp"

namespace dcsched {

// How well a published scheduler specifies a stage: full, partial, or no
// match, rated 100/50/0.
enum class MatchLevel : int { kNone = 0, kPartial = 50, kFull = 100 };

enum class Origin { kAcademia, kIndustry };
enum class Era { kPre2010, kPost2010 };
enum class Deployment { kSingleCluster, kMultiCluster };

struct SchedulerFeatures {
  Origin origin;
  Era era;
  Deployment deployment;
};

struct SchedulerEntry {
  std::string name;
  SchedulerFeatures features;
  std::array<MatchLevel, kStageCount> cells;  // catalog order

  MatchLevel cell(StageId stage) const {
    return cells[static_cast<int>(stage)];
  }
};

struct MappingMatrix {
  std::vector<SchedulerEntry> schedulers;

  const SchedulerEntry* find(std::string_view name) const;
};

// Parses the mapping CSV: header
//   scheduler,origin,era,deployment,J1,...,J7,T1,...,T12,B,M1,...,M6,R1,...,R7
// with cells F/P/N and features A/I, O/N, S/M. Throws ParseError on missing
// cells or unknown codes.
MappingMatrix parse_mapping(std::string_view csv_text);

// Arithmetic mean of the scheduler's ratings over the group's stages,
// rounded half-up to an integer percent.
int group_score(const MappingMatrix& matrix, std::string_view scheduler,
                StageGroup group);

// Mean rating of one stage over the schedulers selected by the predicate,
// rounded half-up. Throws Error when the predicate selects no scheduler.
int feature_mean(const MappingMatrix& matrix, StageId stage,
                 const std::function<bool(const SchedulerFeatures&)>& predicate);

enum class Partition { kOrigin, kEra };

// One row of a partition-difference table; mean_a/mean_b are the rounded
// means of the two sides (academia/industry or pre/post 2010).
struct StageDiff {
  StageId stage;
  int mean_a;
  int mean_b;
};

// Stages ordered by descending pre-rounding |mean_a - mean_b| (exact
// rational comparison), ties broken by catalog order; returns the first k.
std::vector<StageDiff> top_k_diff(const MappingMatrix& matrix,
                                  Partition partition, int k);

// Heatmap bucket of a percentage: [0,25) -> 0, [25,50) -> 1, [50,75) -> 2,
// [75,100] -> 3. Throws Error outside [0,100].
int bucketize(int percent);

}  // namespace dcsched
