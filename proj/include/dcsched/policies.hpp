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

#include <optional>
#include <unordered_set>
#include <vector>

#include "dcsched/rng.hpp"
#include "dcsched/topology.hpp"
#include "dcsched/workload.hpp"

namespace dcsched {

// Task-sorting policies for stage T2.
enum class TaskSortPolicy { kFifo, kSrtf, kRandom };

// Resource-selection policies for stage R5.
enum class AllocationPolicy { kFirstFit, kBestFit, kWorstFit };

// T1 with the default eligibility policy: a task passes if and only if all
// of its parents have finished. Order is preserved.
std::vector<const Task*> t1_dependencies_finished(
    const std::vector<const Task*>& queued,
    const std::unordered_set<TaskId>& finished);

// T2. FIFO orders by (submit_time, task_id); SRTF by (runtime, submit_time,
// task_id), using the trace runtime as the remaining-time estimate; RANDOM
// is a uniform Fisher-Yates shuffle (descending index, SplitMix64 draws).
void t2_sort(std::vector<const Task*>& tasks, TaskSortPolicy policy,
             SplitMix64& rng);

// R4 with the default capacity policy: keeps machines whose free cores cover
// the task's demand. Input order is preserved.
std::vector<int> r4_sufficient_capacity(const std::vector<int>& machines,
                                        const Topology& topology,
                                        const Task& task);

// R5. FIRSTFIT takes the first candidate; BESTFIT minimizes leftover cores;
// WORSTFIT maximizes free cores. Ties go to the lowest machine_id, which is
// the enumeration order of the candidates. Returns nullopt when no machine
// is available.
std::optional<int> r5_select(const std::vector<int>& machines,
                             const Topology& topology, const Task& task,
                             AllocationPolicy policy);

}  // namespace dcsched
