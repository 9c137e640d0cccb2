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

#include <doctest.h>

#include <map>
#include <string>

#include "dcsched/engine.hpp"
#include "dcsched/errors.hpp"
#include "support/generators.hpp"
#include "support/replayer.hpp"

using namespace dcsched;

namespace {

const SchedulerConfig kFifoFirst = SchedulerConfig::parse("FIFO-FIRSTFIT");

}  // namespace

TEST_CASE("an empty trace completes immediately") {
  WorkloadTrace trace = parse_trace("");
  Topology topology = testing::make_topology({1});
  SimState state = create_simulation(trace, topology, kFifoFirst, 0);
  CHECK(state.events.empty());
  SimulationResult result = run_to_completion(state);
  CHECK(result.records.empty());
  CHECK(result.cycle_count == 0);
}

TEST_CASE("create_simulation seeds one arrival per task") {
  SUBCASE("single task") {
    WorkloadTrace trace = parse_trace("0 3 10 1 0 -1\n");
    Topology topology = testing::make_topology({1});
    SimState state = create_simulation(trace, topology, kFifoFirst, 0);
    CHECK(state.events.size() == 1);
    CHECK(state.events.top().time_us == 3 * kMicrosPerSecond);
    CHECK(state.events.top().kind == EventKind::kTaskArrival);
  }
  SUBCASE("burst workload of 1024 three-task workflows") {
    std::vector<Task> tasks;
    for (int job = 0; job < 1024; ++job) {
      for (int i = 0; i < 3; ++i) {
        Task task;
        task.task_id = job * 3 + i;
        task.job_id = job;
        task.submit_us = 0;
        task.runtime_us = kMicrosPerSecond;
        task.cores = 1;
        if (i > 0) task.parents = {task.task_id - 1};
        tasks.push_back(task);
      }
    }
    WorkloadTrace trace = assemble_trace(std::move(tasks));
    Topology topology = testing::make_topology({1});
    SimState state = create_simulation(trace, topology, kFifoFirst, 0);
    CHECK(state.events.size() == 3072);
  }
}

TEST_CASE("create_simulation rejects invalid workloads") {
  Topology topology = testing::make_topology({1});
  WorkloadTrace oversized = parse_trace("0 0 5 8 0 -1\n");
  CHECK_THROWS_WITH_AS(create_simulation(oversized, topology, kFifoFirst, 0),
                       doctest::Contains("UNSCHEDULABLE"), SetupError);
  WorkloadTrace cyclic = parse_trace("0 0 5 1 0 1\n1 0 5 1 0 0\n");
  CHECK_THROWS_WITH_AS(create_simulation(cyclic, topology, kFifoFirst, 0),
                       doctest::Contains("CYCLE"), SetupError);
  // Warnings alone do not block.
  WorkloadTrace warned = parse_trace("0 5 10 1 0 -1\n1 0 5 1 0 0\n");
  CHECK_NOTHROW(create_simulation(warned, topology, kFifoFirst, 0));
}

TEST_CASE("a single task runs start to finish") {
  WorkloadTrace trace = parse_trace("0 0 10 1 0 -1\n");
  Topology topology = testing::make_topology({1});
  SimState state = create_simulation(trace, topology, kFifoFirst, 0);
  SimulationResult result = run_to_completion(state);
  REQUIRE(result.records.size() == 1);
  CHECK(result.records[0].start_us == 0);
  CHECK(result.records[0].finish_us == 10 * kMicrosPerSecond);
  CHECK(result.records[0].machine_id == 0);
  CHECK(result.cycle_count == 2);  // arrival cycle + completion cycle
}

TEST_CASE("two tasks share one core in FIFO order") {
  WorkloadTrace trace = parse_trace(
      "0 0 10 2 0 -1\n"
      "1 0 5 2 1 -1\n");
  Topology topology = testing::make_topology({2});  // one 2-core machine
  SimState state = create_simulation(trace, topology, kFifoFirst, 0);
  SimulationResult result = run_to_completion(state);
  REQUIRE(result.records.size() == 2);
  std::map<TaskId, TaskRecord> by_id;
  for (const TaskRecord& record : result.records) by_id[record.task_id] = record;
  CHECK(by_id[0].start_us == 0);
  CHECK(by_id[1].start_us == by_id[0].finish_us);  // waits for the core
  CHECK(by_id[1].finish_us == 15 * kMicrosPerSecond);
}

TEST_CASE("a chain honors precedence on ample machines") {
  WorkloadTrace trace = parse_trace(
      "0 0 5 1 0 -1\n"
      "1 0 5 1 0 0\n");
  Topology topology = testing::make_topology({1, 1});
  SimState state = create_simulation(trace, topology, kFifoFirst, 0);
  SimulationResult result = run_to_completion(state);
  std::map<TaskId, TaskRecord> by_id;
  for (const TaskRecord& record : result.records) by_id[record.task_id] = record;
  CHECK(by_id[1].start_us == by_id[0].finish_us);
  CHECK(by_id[1].start_us == 5 * kMicrosPerSecond);
  CHECK(by_id[1].finish_us == 10 * kMicrosPerSecond);  // makespan
}

TEST_CASE("co-timed completions free cores before arrivals are scheduled") {
  // Task 0 finishes at exactly the instant task 1 arrives; the batch frees
  // the core first, so the same cycle places task 1 without waiting.
  WorkloadTrace trace = parse_trace(
      "0 0 5 2 0 -1\n"
      "1 5 3 2 1 -1\n");
  Topology topology = testing::make_topology({2});  // one 2-core machine
  SimState state = create_simulation(trace, topology, kFifoFirst, 0);
  SimulationResult result = run_to_completion(state);
  std::map<TaskId, TaskRecord> by_id;
  for (const TaskRecord& record : result.records) by_id[record.task_id] = record;
  CHECK(by_id[0].finish_us == 5 * kMicrosPerSecond);
  CHECK(by_id[1].start_us == 5 * kMicrosPerSecond);
  CHECK(result.cycle_count == 3);  // t=0, t=5s (batch), t=8s
}

TEST_CASE("run_to_completion reports stuck tasks") {
  // Hand-built state: a queued task waiting on a parent that will never
  // finish, and no events left.
  WorkloadTrace trace = parse_trace("0 0 5 1 0 -1\n1 0 5 1 0 0\n");
  SimState state;
  state.trace = &trace;
  state.topology = testing::make_topology({1});
  state.config = kFifoFirst;
  state.enqueue_task(1);
  CHECK_THROWS_WITH_AS(run_to_completion(state), doctest::Contains("waiting on 0"), StuckError);
}

TEST_CASE("identical seeds give identical results, different seeds may not") {
  SplitMix64 rng(77);
  Topology topology = testing::random_topology(rng, 2, 3);
  testing::TraceOptions options;
  options.min_tasks = 8;
  options.max_tasks = 16;
  options.max_cores = topology.max_machine_cores();
  WorkloadTrace trace = testing::random_trace(rng, options);

  for (const char* name : {"RANDOM-BESTFIT", "SRTF-WORSTFIT"}) {
    SchedulerConfig config = SchedulerConfig::parse(name);
    SimState a = create_simulation(trace, topology, config, 5);
    SimState b = create_simulation(trace, topology, config, 5);
    SimulationResult ra = run_to_completion(a);
    SimulationResult rb = run_to_completion(b);
    CHECK(ra.serialize_deterministic() == rb.serialize_deterministic());
  }
}

TEST_CASE("records obey capacity, precedence, and exact durations") {
  SplitMix64 rng(4242);
  for (int i = 0; i < 60; ++i) {
    Topology topology = testing::random_topology(rng);
    testing::TraceOptions options;
    options.max_cores = topology.max_machine_cores();
    WorkloadTrace trace = testing::random_trace(rng, options);
    SchedulerConfig config = testing::random_config(rng);

    SimState state = create_simulation(trace, topology, config, i);
    state.check_invariants = true;  // capacity sweep at every boundary
    SimulationResult result = run_to_completion(state);
    REQUIRE(result.records.size() == trace.tasks.size());

    std::map<TaskId, TaskRecord> by_id;
    for (const TaskRecord& record : result.records) by_id[record.task_id] = record;
    for (const auto& [id, task] : trace.tasks) {
      const TaskRecord& record = by_id.at(id);
      CHECK(record.submit_us == task.submit_us);
      CHECK(record.start_us >= record.submit_us);
      Micros expected = effective_duration_us(
          task.runtime_us, topology.machines[record.machine_id].clock_mhz,
          topology.reference_clock_mhz);
      CHECK(record.finish_us - record.start_us == expected);
      for (TaskId parent : task.parents) {
        CHECK(record.start_us >= by_id.at(parent).finish_us);
      }
    }
  }
}

TEST_CASE("execution time depends on the machine clock, not the sort policy") {
  SplitMix64 rng(31);
  Topology topology = testing::make_topology({1, 2});
  testing::TraceOptions options;
  options.min_tasks = 6;
  options.max_tasks = 12;
  options.max_cores = 2;
  WorkloadTrace trace = testing::random_trace(rng, options);

  auto run = [&](const char* name) {
    SimState state = create_simulation(trace, topology, SchedulerConfig::parse(name), 1);
    return run_to_completion(state);
  };
  SimulationResult fifo = run("FIFO-FIRSTFIT");
  SimulationResult srtf = run("SRTF-FIRSTFIT");
  std::map<TaskId, TaskRecord> fifo_by, srtf_by;
  for (const TaskRecord& r : fifo.records) fifo_by[r.task_id] = r;
  for (const TaskRecord& r : srtf.records) srtf_by[r.task_id] = r;
  for (const auto& [id, a] : fifo_by) {
    const TaskRecord& b = srtf_by.at(id);
    if (topology.machines[a.machine_id].clock_mhz == topology.machines[b.machine_id].clock_mhz) {
      CHECK(a.finish_us - a.start_us == b.finish_us - b.start_us);
    }
  }
}

TEST_CASE("the engine matches the brute-force replayer on small cases") {
  SplitMix64 rng(909);
  Topology topology = testing::make_topology({1, 2});
  for (int i = 0; i < 100; ++i) {
    testing::TraceOptions options;
    options.max_tasks = 5;
    options.max_cores = 4;
    WorkloadTrace trace = testing::random_trace(rng, options);
    SchedulerConfig config = testing::random_config(rng);
    SimState state = create_simulation(trace, topology, config, i);
    SimulationResult result = run_to_completion(state);
    auto expected = testing::replay_brute_force(trace, topology, config, i);
    REQUIRE(expected.size() == result.records.size());
    for (const TaskRecord& record : result.records) {
      const testing::ReplayRecord& oracle = expected.at(record.task_id);
      CHECK(record.start_us == oracle.start_us);
      CHECK(record.finish_us == oracle.finish_us);
      CHECK(record.machine_id == oracle.machine_id);
    }
  }
}
