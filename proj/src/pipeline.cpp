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

#include "dcsched/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "dcsched/engine.hpp"
#include "dcsched/errors.hpp"

namespace dcsched {

SchedulerConfig SchedulerConfig::parse(std::string_view name) {
  std::size_t dash = name.find('-');
  if (dash == std::string_view::npos) {
    throw ParseError("scheduler name '" + std::string(name) + "' is not <SORT>-<ALLOCATION>");
  }
  std::string_view sort = name.substr(0, dash);
  std::string_view alloc = name.substr(dash + 1);
  SchedulerConfig config;
  config.name = std::string(name);
  if (sort == "FIFO") {
    config.task_sort = TaskSortPolicy::kFifo;
  } else if (sort == "SRTF") {
    config.task_sort = TaskSortPolicy::kSrtf;
  } else if (sort == "RANDOM") {
    config.task_sort = TaskSortPolicy::kRandom;
  } else {
    throw ParseError("unknown task-sort policy '" + std::string(sort) + "'");
  }
  if (alloc == "FIRSTFIT") {
    config.allocation = AllocationPolicy::kFirstFit;
  } else if (alloc == "BESTFIT") {
    config.allocation = AllocationPolicy::kBestFit;
  } else if (alloc == "WORSTFIT") {
    config.allocation = AllocationPolicy::kWorstFit;
  } else {
    throw ParseError("unknown allocation policy '" + std::string(alloc) + "'");
  }
  return config;
}

std::vector<SchedulerConfig> SchedulerConfig::all() {
  std::vector<SchedulerConfig> configs;
  for (const char* sort : {"SRTF", "FIFO", "RANDOM"}) {
    for (const char* alloc : {"BESTFIT", "FIRSTFIT", "WORSTFIT"}) {
      configs.push_back(parse(std::string(sort) + "-" + alloc));
    }
  }
  return configs;
}

namespace {

using Clock = std::chrono::steady_clock;

// One clock read per stage boundary; consecutive laps are disjoint by
// construction.
class StageStopwatch {
 public:
  explicit StageStopwatch(bool enabled) : enabled_(enabled) {}

  void start() {
    if (enabled_) last_ = Clock::now();
  }

  Nanos lap() {
    if (!enabled_) return 0;
    Clock::time_point now = Clock::now();
    Nanos ns = std::chrono::duration_cast<std::chrono::nanoseconds>(now - last_).count();
    last_ = now;
    return ns;
  }

 private:
  bool enabled_;
  Clock::time_point last_{};
};

}  // namespace

CycleResult run_cycle(SimState& state) {
  CycleResult out;
  const bool timed = state.collect_stage_timings;
  const std::int64_t cycle = state.cycle_count;
  const Micros sim_time = state.clock_us;
  auto record = [&](StageId stage, Nanos ns, std::int64_t entries) {
    if (timed) {
      out.timings.push_back({cycle, sim_time, stage, ns, entries});
    }
  };

  StageStopwatch watch(timed);
  watch.start();

  // J1: ingest the jobs that currently have queued tasks.
  std::vector<const Job*> jobs;
  jobs.reserve(state.queued_by_job.size());
  for (const auto& [job_id, members] : state.queued_by_job) {
    jobs.push_back(&state.trace->jobs.at(job_id));
  }
  record(StageId::J1, watch.lap(), static_cast<std::int64_t>(jobs.size()));

  // J2: eligibility filter, pass-all policy.
  std::vector<const Job*> eligible_jobs = jobs;
  record(StageId::J2, watch.lap(), static_cast<std::int64_t>(jobs.size()));

  // J3: sort jobs by (submit time, job_id).
  std::sort(eligible_jobs.begin(), eligible_jobs.end(), [](const Job* a, const Job* b) {
    return std::tie(a->submit_us, a->job_id) < std::tie(b->submit_us, b->job_id);
  });
  record(StageId::J3, watch.lap(), static_cast<std::int64_t>(eligible_jobs.size()));

  if (eligible_jobs.empty()) {
    return out;
  }

  // J4/J5: per job, hand its queued tasks to the task pipeline; the setup
  // hook has no side effects in simulation.
  Nanos j4_ns = 0;
  Nanos j5_ns = 0;
  std::vector<const Task*> task_queue;
  task_queue.reserve(state.queued_count);
  watch.start();
  for (const Job* job : eligible_jobs) {
    for (TaskId task_id : state.queued_by_job.at(job->job_id)) {
      task_queue.push_back(&state.trace->tasks.at(task_id));
    }
    j4_ns += watch.lap();
    // J5: job setup hook.
    j5_ns += watch.lap();
  }
  record(StageId::J4, j4_ns, static_cast<std::int64_t>(eligible_jobs.size()));
  record(StageId::J5, j5_ns, static_cast<std::int64_t>(eligible_jobs.size()));

  // T1: keep tasks whose dependencies have all finished.
  const std::int64_t t1_entries = static_cast<std::int64_t>(task_queue.size());
  watch.start();
  std::vector<const Task*> eligible = t1_dependencies_finished(task_queue, state.finished);
  record(StageId::T1, watch.lap(), t1_entries);

  // T2: sort by the configured policy.
  watch.start();
  t2_sort(eligible, state.config.task_sort, state.rng);
  record(StageId::T2, watch.lap(), static_cast<std::int64_t>(eligible.size()));

  if (eligible.empty()) {
    return out;
  }

  const std::int64_t n_eligible = static_cast<std::int64_t>(eligible.size());
  Nanos m1_ns = 0, m2_ns = 0, r1_ns = 0, r2_ns = 0, r3_ns = 0, r4_ns = 0, r5_ns = 0, t4_ns = 0;
  std::vector<int> candidates;
  std::vector<int> filtered;
  candidates.reserve(state.topology.machines.size());
  filtered.reserve(state.topology.machines.size());

  StageStopwatch loop_watch(timed);
  loop_watch.start();
  for (const Task* task : eligible) {
    watch.start();
    // M1: no broker; the task stays in the pipeline.
    m1_ns += watch.lap();
    // M2: monolithic mode; control stays with this scheduler.
    m2_ns += watch.lap();

    // R1: enumerate the machines.
    candidates.resize(state.topology.machines.size());
    std::iota(candidates.begin(), candidates.end(), 0);
    r1_ns += watch.lap();

    // R2: authorization filter, pass-all policy.
    filtered = candidates;
    r2_ns += watch.lap();

    // R3: static requirements (total core count).
    std::erase_if(filtered, [&](int machine_id) {
      return state.topology.machines[machine_id].cores < task->cores;
    });
    r3_ns += watch.lap();

    // R4: dynamic capacity.
    filtered = r4_sufficient_capacity(filtered, state.topology, *task);
    r4_ns += watch.lap();

    // R5: pick a machine, if any survived.
    std::optional<int> choice =
        r5_select(filtered, state.topology, *task, state.config.allocation);
    r5_ns += watch.lap();

    if (choice) {
      // T4: final reservation; book the completion event. Task setup (T5)
      // has no simulated cost.
      Machine& machine = state.topology.machines[*choice];
      machine.available_cores -= task->cores;
      Micros finish = state.clock_us + effective_duration_us(task->runtime_us, machine.clock_mhz,
                                                             state.topology.reference_clock_mhz);
      state.dequeue_task(task->task_id);
      state.running.emplace(task->task_id, RunningTask{*choice, finish});
      state.records.push_back(
          {task->task_id, task->submit_us, state.clock_us, finish, *choice});
      state.push_event(finish, EventKind::kTaskCompletion, task->task_id);
      out.placements.push_back({task->task_id, *choice});
      t4_ns += watch.lap();
    }
  }
  Nanos loop_ns = loop_watch.lap();
  Nanos inner_ns = m1_ns + m2_ns + r1_ns + r2_ns + r3_ns + r4_ns + r5_ns + t4_ns;

  // T3 carries the iteration scaffolding not attributed to inner stages.
  record(StageId::T3, std::max<Nanos>(0, loop_ns - inner_ns), n_eligible);
  record(StageId::M1, m1_ns, n_eligible);
  record(StageId::M2, m2_ns, n_eligible);
  record(StageId::R1, r1_ns, n_eligible);
  record(StageId::R2, r2_ns, n_eligible);
  record(StageId::R3, r3_ns, n_eligible);
  record(StageId::R4, r4_ns, n_eligible);
  record(StageId::R5, r5_ns, n_eligible);
  if (!out.placements.empty()) {
    record(StageId::T4, t4_ns, static_cast<std::int64_t>(out.placements.size()));
  }

  if (state.check_invariants && out.placements.empty()) {
    // Work conservation: an empty cycle must mean no eligible task had a
    // feasible machine.
    for (const Task* task : eligible) {
      for (const Machine& machine : state.topology.machines) {
        if (machine.cores >= task->cores && machine.available_cores >= task->cores) {
          throw std::logic_error("cycle placed nothing although task " +
                                 std::to_string(task->task_id) + " fits machine " +
                                 std::to_string(machine.machine_id));
        }
      }
    }
  }

  return out;
}

}  // namespace dcsched
