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

#include "dcsched/workload.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <deque>
#include <unordered_map>

#include "dcsched/errors.hpp"
#include "dcsched/topology.hpp"

namespace dcsched {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) {
      fields.push_back(line.substr(start, i - start));
    }
  }
  return fields;
}

std::int64_t parse_int(std::string_view field, int line, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(field) + "'", line);
  }
  return value;
}

// One million years in seconds; beyond this the microsecond clock would
// overflow.
constexpr double kMaxSeconds = 3.2e13;

double parse_seconds(std::string_view field, int line, const char* what) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(value) ||
      value > kMaxSeconds) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(field) + "'", line);
  }
  return value;
}

std::vector<TaskId> parse_parents(std::string_view field, int line) {
  if (field == "-1") {
    return {};
  }
  std::vector<TaskId> parents;
  std::size_t pos = 0;
  while (pos <= field.size()) {
    std::size_t comma = field.find(',', pos);
    std::string_view item =
        field.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (item.empty()) {
      throw ParseError("empty parent entry in '" + std::string(field) + "'", line);
    }
    TaskId parent = parse_int(item, line, "parent task_id");
    if (parent < 0) {
      throw ParseError("negative parent task_id", line);
    }
    parents.push_back(parent);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  std::sort(parents.begin(), parents.end());
  parents.erase(std::unique(parents.begin(), parents.end()), parents.end());
  return parents;
}

}  // namespace

ColumnLayout ColumnLayout::parse(std::string_view spec) {
  std::vector<int> indices;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string_view item =
        spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || value < 0) {
      throw ParseError("invalid column index '" + std::string(item) + "'");
    }
    indices.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (indices.size() != 6) {
    throw ParseError("column layout needs exactly 6 indices (task_id,submit,runtime,cores,job_id,parents)");
  }
  ColumnLayout layout;
  layout.task_id = indices[0];
  layout.submit_time = indices[1];
  layout.runtime = indices[2];
  layout.cores = indices[3];
  layout.job_id = indices[4];
  layout.parents = indices[5];
  layout.allow_extra_fields = true;
  return layout;
}

int ColumnLayout::max_index() const {
  return std::max({task_id, submit_time, runtime, cores, job_id, parents});
}

WorkloadTrace parse_trace(std::string_view text, std::string source_name,
                          const ColumnLayout& layout) {
  std::vector<Task> tasks;
  int line_no = 0;
  std::size_t pos = 0;
  const std::size_t required = static_cast<std::size_t>(layout.max_index()) + 1;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') {
      continue;
    }
    auto fields = split_fields(line);
    if (layout.allow_extra_fields ? fields.size() < required : fields.size() != required) {
      throw ParseError("expected " + std::to_string(required) + " fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    }

    Task task;
    task.task_id = parse_int(fields[layout.task_id], line_no, "task_id");
    task.job_id = parse_int(fields[layout.job_id], line_no, "job_id");
    double submit_s = parse_seconds(fields[layout.submit_time], line_no, "submit_time");
    double runtime_s = parse_seconds(fields[layout.runtime], line_no, "runtime");
    std::int64_t cores = parse_int(fields[layout.cores], line_no, "cores");
    task.parents = parse_parents(fields[layout.parents], line_no);

    if (task.task_id < 0) throw ParseError("negative task_id", line_no);
    if (task.job_id < 0) throw ParseError("negative job_id", line_no);
    if (!(submit_s >= 0)) throw ParseError("submit_time must be >= 0", line_no);
    if (!(runtime_s > 0)) throw ParseError("runtime must be > 0", line_no);
    if (cores < 1 || cores > 1'000'000) throw ParseError("cores out of range", line_no);
    task.cores = static_cast<int>(cores);
    task.submit_us = seconds_to_micros(submit_s);
    task.runtime_us = std::max<Micros>(1, seconds_to_micros(runtime_s));
    tasks.push_back(std::move(task));
  }
  return assemble_trace(std::move(tasks), std::move(source_name));
}

WorkloadTrace assemble_trace(std::vector<Task> tasks, std::string source_name) {
  WorkloadTrace trace;
  trace.source_name = std::move(source_name);
  for (Task& task : tasks) {
    TaskId id = task.task_id;
    if (!trace.tasks.emplace(id, std::move(task)).second) {
      throw ParseError("duplicate task_id " + std::to_string(id));
    }
  }
  for (const auto& [id, task] : trace.tasks) {
    for (TaskId parent : task.parents) {
      auto it = trace.tasks.find(parent);
      if (it == trace.tasks.end()) {
        throw ParseError("task " + std::to_string(id) + " depends on unknown task " +
                         std::to_string(parent));
      }
      if (it->second.job_id != task.job_id) {
        throw ParseError("task " + std::to_string(id) + " depends on task " +
                         std::to_string(parent) + " of another job");
      }
    }
    auto [job_it, inserted] = trace.jobs.try_emplace(task.job_id);
    Job& job = job_it->second;
    if (inserted) {
      job.job_id = task.job_id;
      job.submit_us = task.submit_us;
    }
    job.task_ids.push_back(id);  // map order keeps these ascending
    job.submit_us = std::min(job.submit_us, task.submit_us);
  }
  return trace;
}

std::string emit_trace(const WorkloadTrace& trace) {
  std::string out = "# task_id submit_time runtime cores job_id parents\n";
  char buffer[64];
  for (const auto& [id, task] : trace.tasks) {
    out += std::to_string(id);
    std::snprintf(buffer, sizeof buffer, " %.6f %.6f ", micros_to_seconds(task.submit_us),
                  micros_to_seconds(task.runtime_us));
    out += buffer;
    out += std::to_string(task.cores);
    out += ' ';
    out += std::to_string(task.job_id);
    out += ' ';
    if (task.parents.empty()) {
      out += "-1";
    } else {
      for (std::size_t i = 0; i < task.parents.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(task.parents[i]);
      }
    }
    out += '\n';
  }
  return out;
}

std::string Violation::to_string() const {
  switch (kind) {
    case ViolationKind::kCycle:
      return "CYCLE(job " + std::to_string(job_id) + ")";
    case ViolationKind::kUnschedulable:
      return "UNSCHEDULABLE(task " + std::to_string(task_id) + ")";
    case ViolationKind::kSubmitBeforeParent:
      return "SUBMIT_BEFORE_PARENT(task " + std::to_string(task_id) + ", parent " +
             std::to_string(parent_id) + ")";
  }
  return "UNKNOWN";
}

namespace {

// Kahn's algorithm over one job; returns the processed tasks in topological
// order, or fewer than the job's size when a cycle exists.
std::vector<TaskId> topo_order(const Job& job, const WorkloadTrace& trace) {
  std::unordered_map<TaskId, int> in_degree;
  std::unordered_map<TaskId, std::vector<TaskId>> children;
  for (TaskId id : job.task_ids) {
    const Task& task = trace.tasks.at(id);
    in_degree[id] += 0;
    for (TaskId parent : task.parents) {
      ++in_degree[id];
      children[parent].push_back(id);
    }
  }
  std::deque<TaskId> ready;
  for (TaskId id : job.task_ids) {
    if (in_degree[id] == 0) ready.push_back(id);
  }
  std::vector<TaskId> order;
  while (!ready.empty()) {
    TaskId id = ready.front();
    ready.pop_front();
    order.push_back(id);
    auto it = children.find(id);
    if (it == children.end()) continue;
    for (TaskId child : it->second) {
      if (--in_degree[child] == 0) ready.push_back(child);
    }
  }
  return order;
}

}  // namespace

std::vector<Violation> validate_workload(const WorkloadTrace& trace,
                                         const Topology& topology) {
  std::vector<Violation> violations;
  const int max_cores = topology.max_machine_cores();
  for (const auto& [job_id, job] : trace.jobs) {
    if (topo_order(job, trace).size() != job.task_ids.size()) {
      violations.push_back({ViolationKind::kCycle, job_id, -1, -1});
    }
  }
  for (const auto& [task_id, task] : trace.tasks) {
    if (task.cores > max_cores) {
      violations.push_back({ViolationKind::kUnschedulable, task.job_id, task_id, -1});
    }
    for (TaskId parent : task.parents) {
      if (task.submit_us < trace.tasks.at(parent).submit_us) {
        violations.push_back(
            {ViolationKind::kSubmitBeforeParent, task.job_id, task_id, parent});
      }
    }
  }
  return violations;
}

Micros critical_path_length(const Job& job, const WorkloadTrace& trace) {
  std::vector<TaskId> order = topo_order(job, trace);
  if (order.size() != job.task_ids.size()) {
    throw Error("CYCLE in job " + std::to_string(job.job_id));
  }
  std::unordered_map<TaskId, Micros> longest;
  Micros best = 0;
  for (TaskId id : order) {
    const Task& task = trace.tasks.at(id);
    Micros from_parents = 0;
    for (TaskId parent : task.parents) {
      from_parents = std::max(from_parents, longest.at(parent));
    }
    longest[id] = from_parents + task.runtime_us;
    best = std::max(best, longest[id]);
  }
  return best;
}

}  // namespace dcsched
