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
#include <string>
#include <string_view>
#include <vector>

#include "dcsched/time.hpp"

namespace dcsched {

struct Topology;

using TaskId = std::int64_t;
using JobId = std::int64_t;

// One row of a workload trace. Runtimes are durations on a machine of the
// topology's reference clock; parents are precedence constraints within the
// same job.
struct Task {
  TaskId task_id = 0;
  JobId job_id = 0;
  Micros submit_us = 0;
  Micros runtime_us = 0;
  int cores = 1;
  std::vector<TaskId> parents;  // sorted, unique, same job

  bool operator==(const Task&) const = default;
};

// A workflow: the set of tasks sharing a job_id.
struct Job {
  JobId job_id = 0;
  std::vector<TaskId> task_ids;  // ascending
  Micros submit_us = 0;          // min over member tasks

  bool operator==(const Job&) const = default;
};

struct WorkloadTrace {
  std::map<TaskId, Task> tasks;
  std::map<JobId, Job> jobs;
  std::string source_name;

  bool operator==(const WorkloadTrace&) const = default;
};

// Column positions of the six trace fields, for ingesting files whose layout
// differs from the canonical one (e.g. wider archive formats). When
// allow_extra_fields is set, lines may carry more columns than referenced.
struct ColumnLayout {
  int task_id = 0;
  int submit_time = 1;
  int runtime = 2;
  int cores = 3;
  int job_id = 4;
  int parents = 5;
  bool allow_extra_fields = false;

  // Parses "t,s,r,c,j,p" (six non-negative column indices).
  static ColumnLayout parse(std::string_view spec);

  int max_index() const;
};

// Parses the canonical whitespace-separated trace format:
//   task_id submit_time runtime cores job_id parents
// with '#' comment lines, blank lines ignored, seconds for the two time
// fields, and parents either "-1" or a comma-separated task_id list.
// Throws ParseError (with line number) on malformed lines, duplicate ids,
// unknown or cross-job parents.
WorkloadTrace parse_trace(std::string_view text, std::string source_name = "",
                          const ColumnLayout& layout = ColumnLayout{});

// Groups tasks into jobs and produces a fully linked trace. Parent ids must
// exist and stay within the task's own job.
WorkloadTrace assemble_trace(std::vector<Task> tasks,
                             std::string source_name = "");

// Serializes a trace in the canonical format; parse_trace(emit_trace(t))
// round-trips.
std::string emit_trace(const WorkloadTrace& trace);

enum class ViolationKind {
  kCycle,              // precedence cycle inside a job
  kUnschedulable,      // task needs more cores than any machine has
  kSubmitBeforeParent  // warning: task submitted before a parent
};

struct Violation {
  ViolationKind kind;
  JobId job_id = -1;
  TaskId task_id = -1;
  TaskId parent_id = -1;

  bool is_warning() const { return kind == ViolationKind::kSubmitBeforeParent; }
  std::string to_string() const;

  bool operator==(const Violation&) const = default;
};

// Returns all violations (errors and warnings) of the trace against the
// topology. Never throws; an empty result means the trace is clean.
std::vector<Violation> validate_workload(const WorkloadTrace& trace,
                                         const Topology& topology);

// Longest root-to-leaf chain of the job by summed reference-speed runtimes:
// the shortest possible execution time of the job. Throws Error on a cycle.
Micros critical_path_length(const Job& job, const WorkloadTrace& trace);

}  // namespace dcsched
