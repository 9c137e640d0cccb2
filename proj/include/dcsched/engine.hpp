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
#include <map>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dcsched/pipeline.hpp"
#include "dcsched/rng.hpp"
#include "dcsched/topology.hpp"
#include "dcsched/workload.hpp"

namespace dcsched {

enum class EventKind { kTaskCompletion = 0, kTaskArrival = 1 };

// Events are totally ordered by (time, seq); seq is assigned monotonically
// at insertion. Within a same-time batch, completions are applied before
// arrivals so freed capacity is visible to the cycle that follows.
struct SimEvent {
  Micros time_us;
  std::uint64_t seq;
  EventKind kind;
  TaskId task_id;
};

struct RunningTask {
  int machine_id;
  Micros finish_us;
};

struct TaskRecord {
  TaskId task_id;
  Micros submit_us;
  Micros start_us;
  Micros finish_us;
  int machine_id;
};

struct SimulationResult {
  std::vector<TaskRecord> records;  // in placement order
  std::vector<StageTiming> timings;
  std::int64_t cycle_count = 0;

  // Canonical text form for determinism checks. Wall-clock stage durations
  // are excluded; everything else (records, cycle structure, queue lengths)
  // is covered.
  std::string serialize_deterministic() const;
};

// Full state of one simulation. Owned by a single thread; the trace is
// shared and immutable, the topology copy carries the mutable core counts.
struct SimState {
  const WorkloadTrace* trace = nullptr;
  Topology topology;
  SchedulerConfig config;

  Micros clock_us = 0;
  std::priority_queue<SimEvent, std::vector<SimEvent>, bool (*)(const SimEvent&, const SimEvent&)>
      events;
  std::uint64_t next_seq = 0;
  // Arrived, not yet started tasks, grouped by job; both levels stay in
  // ascending id order.
  std::map<JobId, std::set<TaskId>> queued_by_job;
  std::size_t queued_count = 0;
  std::unordered_map<TaskId, RunningTask> running;
  std::unordered_set<TaskId> finished;
  std::vector<TaskRecord> records;
  std::vector<StageTiming> timings;
  SplitMix64 rng{0};
  std::int64_t cycle_count = 0;

  // Debug sweeps: per-machine capacity accounting at every event boundary
  // and work conservation after empty cycles.
  bool check_invariants = false;
  // When false, stages are not timed and no StageTiming rows are produced.
  bool collect_stage_timings = true;

  SimState();
  void push_event(Micros time_us, EventKind kind, TaskId task_id);
  void enqueue_task(TaskId task_id);
  void dequeue_task(TaskId task_id);
  bool is_queued(TaskId task_id) const;
};

// Validates the workload against the topology and builds the initial state:
// one arrival event per task at its submit time, clock at zero, and the
// generator seeded from (seed, config name). Throws SetupError listing any
// cycle or unschedulable-task violations.
SimState create_simulation(const WorkloadTrace& trace, const Topology& topology,
                           const SchedulerConfig& config, std::uint64_t seed);

// Processes the next batch of same-time events (completions first, then
// arrivals) and runs exactly one scheduling cycle. Returns false when no
// events remain.
bool step(SimState& state);

// Runs the event loop to completion. Throws StuckError with a diagnostic of
// the blocked tasks if events run out while tasks are still queued.
SimulationResult run_to_completion(SimState& state);

}  // namespace dcsched
