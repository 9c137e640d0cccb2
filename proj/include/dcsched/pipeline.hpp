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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dcsched/policies.hpp"
#include "dcsched/stages.hpp"
#include "dcsched/time.hpp"

namespace dcsched {

struct SimState;

// A named (task-sort, allocation) policy pair; the unit experiments vary.
struct SchedulerConfig {
  std::string name;  // e.g. "SRTF-BESTFIT"
  TaskSortPolicy task_sort = TaskSortPolicy::kFifo;
  AllocationPolicy allocation = AllocationPolicy::kFirstFit;

  // Parses "<SORT>-<ALLOCATION>" with SORT in {FIFO, SRTF, RANDOM} and
  // ALLOCATION in {FIRSTFIT, BESTFIT, WORSTFIT}. Throws ParseError.
  static SchedulerConfig parse(std::string_view name);

  // The nine combinations, in reporting order (SRTF, FIFO, RANDOM x
  // BESTFIT, FIRSTFIT, WORSTFIT).
  static std::vector<SchedulerConfig> all();
};

// Wall-clock duration and entry count of one stage execution within one
// scheduling cycle. Iterated stages aggregate their per-item time into a
// single row per cycle; stage timers are disjoint, so per-cycle rows never
// overlap.
struct StageTiming {
  std::int64_t cycle_index = 0;
  Micros sim_time_us = 0;
  StageId stage = StageId::J1;
  Nanos duration_ns = 0;
  std::int64_t queue_length = 0;  // jobs for J stages, tasks otherwise
};

struct Placement {
  TaskId task_id;
  int machine_id;
};

struct CycleResult {
  std::vector<Placement> placements;
  std::vector<StageTiming> timings;
};

// Runs one scheduling cycle at the current event boundary: ingest and order
// the arrived jobs (J1-J5), filter and sort the eligible tasks (T1-T2), and
// walk each task through the monolithic management pass and the resource
// stages (T3, M1-M2, R1-R5), reserving cores and scheduling completions for
// every placed task (T4). Tasks without a surviving machine stay queued for
// the next cycle. Timings contain one row per reached stage, in
// stage_order() order.
CycleResult run_cycle(SimState& state);

}  // namespace dcsched
