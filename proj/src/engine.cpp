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

#include "dcsched/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "dcsched/errors.hpp"

namespace dcsched {

namespace {

bool event_after(const SimEvent& a, const SimEvent& b) {
  if (a.time_us != b.time_us) return a.time_us > b.time_us;
  return a.seq > b.seq;
}

}  // namespace

SimState::SimState() : events(&event_after) {}

void SimState::push_event(Micros time_us, EventKind kind, TaskId task_id) {
  events.push({time_us, next_seq++, kind, task_id});
}

void SimState::enqueue_task(TaskId task_id) {
  if (queued_by_job[trace->tasks.at(task_id).job_id].insert(task_id).second) {
    ++queued_count;
  }
}

void SimState::dequeue_task(TaskId task_id) {
  auto it = queued_by_job.find(trace->tasks.at(task_id).job_id);
  if (it != queued_by_job.end() && it->second.erase(task_id) > 0) {
    --queued_count;
    if (it->second.empty()) {
      queued_by_job.erase(it);
    }
  }
}

bool SimState::is_queued(TaskId task_id) const {
  auto it = queued_by_job.find(trace->tasks.at(task_id).job_id);
  return it != queued_by_job.end() && it->second.contains(task_id);
}

SimState create_simulation(const WorkloadTrace& trace, const Topology& topology,
                           const SchedulerConfig& config, std::uint64_t seed) {
  std::vector<Violation> blocking;
  for (const Violation& violation : validate_workload(trace, topology)) {
    if (!violation.is_warning()) {
      blocking.push_back(violation);
    }
  }
  if (!blocking.empty()) {
    std::string message = "workload fails validation:";
    for (const Violation& violation : blocking) {
      message += " " + violation.to_string();
    }
    throw SetupError(message);
  }

  SimState state;
  state.trace = &trace;
  state.topology = topology;
  for (Machine& machine : state.topology.machines) {
    machine.available_cores = machine.cores;
  }
  state.config = config;
  state.rng = SplitMix64(seed ^ fnv1a64(config.name));
  for (const auto& [task_id, task] : trace.tasks) {
    state.push_event(task.submit_us, EventKind::kTaskArrival, task_id);
  }
  return state;
}

namespace {

void sweep_capacity(const SimState& state) {
  std::vector<int> used(state.topology.machines.size(), 0);
  for (const auto& [task_id, running] : state.running) {
    used[running.machine_id] += state.trace->tasks.at(task_id).cores;
  }
  for (const Machine& machine : state.topology.machines) {
    if (machine.available_cores < 0 || machine.available_cores > machine.cores ||
        machine.cores - machine.available_cores != used[machine.machine_id]) {
      throw std::logic_error("capacity accounting broken on machine " +
                             std::to_string(machine.machine_id));
    }
  }
}

}  // namespace

bool step(SimState& state) {
  if (state.events.empty()) {
    return false;
  }
  const Micros now = state.events.top().time_us;
  state.clock_us = now;

  std::vector<SimEvent> batch;
  while (!state.events.empty() && state.events.top().time_us == now) {
    batch.push_back(state.events.top());
    state.events.pop();
  }
  // Completions first, so capacity freed at this instant is available to
  // co-timed arrivals and to the cycle below.
  for (const SimEvent& event : batch) {
    if (event.kind != EventKind::kTaskCompletion) continue;
    // T7/T8: mark the task finished and release its cores.
    const RunningTask& running = state.running.at(event.task_id);
    state.topology.machines[running.machine_id].available_cores +=
        state.trace->tasks.at(event.task_id).cores;
    state.running.erase(event.task_id);
    state.finished.insert(event.task_id);
  }
  for (const SimEvent& event : batch) {
    if (event.kind == EventKind::kTaskArrival) {
      state.enqueue_task(event.task_id);
    }
  }

  if (state.check_invariants) {
    sweep_capacity(state);
  }

  CycleResult cycle = run_cycle(state);
  state.timings.insert(state.timings.end(), cycle.timings.begin(), cycle.timings.end());
  ++state.cycle_count;
  return true;
}

SimulationResult run_to_completion(SimState& state) {
  while (step(state)) {
  }
  if (state.queued_count > 0) {
    std::string message = "STUCK: no events left but tasks are still queued:";
    for (const auto& [job_id, members] : state.queued_by_job) {
      for (TaskId task_id : members) {
        message += " " + std::to_string(task_id);
        const Task& task = state.trace->tasks.at(task_id);
        std::string waiting;
        for (TaskId parent : task.parents) {
          if (!state.finished.contains(parent)) {
            waiting += waiting.empty() ? "" : ",";
            waiting += std::to_string(parent);
          }
        }
        if (!waiting.empty()) {
          message += "(waiting on " + waiting + ")";
        }
      }
    }
    throw StuckError(message);
  }
  SimulationResult result;
  result.records = std::move(state.records);
  result.timings = std::move(state.timings);
  result.cycle_count = state.cycle_count;
  return result;
}

std::string SimulationResult::serialize_deterministic() const {
  std::string out = "cycles " + std::to_string(cycle_count) + "\n";
  for (const TaskRecord& record : records) {
    out += "task " + std::to_string(record.task_id) + " " + std::to_string(record.submit_us) +
           " " + std::to_string(record.start_us) + " " + std::to_string(record.finish_us) + " " +
           std::to_string(record.machine_id) + "\n";
  }
  for (const StageTiming& timing : timings) {
    out += "stage " + std::to_string(timing.cycle_index) + " " +
           std::to_string(timing.sim_time_us) + " " + std::string(stage_name(timing.stage)) +
           " " + std::to_string(timing.queue_length) + "\n";
  }
  return out;
}

}  // namespace dcsched
