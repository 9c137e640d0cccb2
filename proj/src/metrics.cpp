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

#include "dcsched/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

#include "dcsched/errors.hpp"

namespace dcsched {

namespace {

std::string format_double(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
  return buffer;
}

constexpr const char* kTaskHeader =
    "config,repetition,task_id,job_id,submit_us,start_us,finish_us,wait_us,exec_us,trt_us\n";
constexpr const char* kJobHeader = "config,repetition,job_id,jms_us,njsl,jwt_us\n";
constexpr const char* kStageHeader =
    "config,repetition,cycle_index,sim_time_us,stage,duration_ns,queue_length\n";
constexpr const char* kSummaryHeader = "config,avg_jms_s,avg_njsl,avg_jwt_s,avg_trt_s\n";

void append_task_rows(std::string& out, const MetricsReport& report) {
  for (const TaskMetrics& t : report.tasks) {
    out += report.config + "," + std::to_string(report.repetition) + "," +
           std::to_string(t.task_id) + "," + std::to_string(t.job_id) + "," +
           std::to_string(t.submit_us) + "," + std::to_string(t.start_us) + "," +
           std::to_string(t.finish_us) + "," + std::to_string(t.wait_us) + "," +
           std::to_string(t.exec_us) + "," + std::to_string(t.trt_us) + "\n";
  }
}

void append_job_rows(std::string& out, const MetricsReport& report) {
  for (const JobMetrics& j : report.jobs) {
    out += report.config + "," + std::to_string(report.repetition) + "," +
           std::to_string(j.job_id) + "," + std::to_string(j.jms_us) + "," +
           format_double(j.njsl, 6) + "," + std::to_string(j.jwt_us) + "\n";
  }
}

}  // namespace

MetricsReport compute_metrics(const SimulationResult& result,
                              const WorkloadTrace& trace, std::string config,
                              int repetition) {
  std::unordered_map<TaskId, const TaskRecord*> by_task;
  by_task.reserve(result.records.size());
  for (const TaskRecord& record : result.records) {
    by_task[record.task_id] = &record;
  }
  if (by_task.size() != trace.tasks.size()) {
    throw MetricsError("INCOMPLETE: " + std::to_string(by_task.size()) + " records for " +
                       std::to_string(trace.tasks.size()) + " tasks");
  }

  MetricsReport report;
  report.config = std::move(config);
  report.repetition = repetition;
  for (const auto& [task_id, task] : trace.tasks) {
    auto it = by_task.find(task_id);
    if (it == by_task.end()) {
      throw MetricsError("INCOMPLETE: task " + std::to_string(task_id) + " has no record");
    }
    const TaskRecord& record = *it->second;
    TaskMetrics metrics;
    metrics.task_id = task_id;
    metrics.job_id = task.job_id;
    metrics.submit_us = record.submit_us;
    metrics.start_us = record.start_us;
    metrics.finish_us = record.finish_us;
    metrics.wait_us = record.start_us - record.submit_us;
    metrics.exec_us = record.finish_us - record.start_us;
    metrics.trt_us = record.finish_us - record.submit_us;
    report.tasks.push_back(metrics);
  }

  for (const auto& [job_id, job] : trace.jobs) {
    Micros first_submit = job.submit_us;
    Micros first_start = by_task.at(job.task_ids.front())->start_us;
    Micros last_finish = 0;
    for (TaskId task_id : job.task_ids) {
      const TaskRecord& record = *by_task.at(task_id);
      first_start = std::min(first_start, record.start_us);
      last_finish = std::max(last_finish, record.finish_us);
    }
    JobMetrics metrics;
    metrics.job_id = job_id;
    metrics.jms_us = last_finish - first_submit;
    metrics.jwt_us = first_start - first_submit;
    metrics.njsl = static_cast<double>(metrics.jms_us) /
                   static_cast<double>(critical_path_length(job, trace));
    report.jobs.push_back(metrics);
  }

  double trt_sum = 0, jms_sum = 0, njsl_sum = 0, jwt_sum = 0;
  for (const TaskMetrics& t : report.tasks) trt_sum += micros_to_seconds(t.trt_us);
  for (const JobMetrics& j : report.jobs) {
    jms_sum += micros_to_seconds(j.jms_us);
    njsl_sum += j.njsl;
    jwt_sum += micros_to_seconds(j.jwt_us);
  }
  if (!report.tasks.empty()) {
    report.averages.trt_s = trt_sum / static_cast<double>(report.tasks.size());
  }
  if (!report.jobs.empty()) {
    double n = static_cast<double>(report.jobs.size());
    report.averages.jms_s = jms_sum / n;
    report.averages.njsl = njsl_sum / n;
    report.averages.jwt_s = jwt_sum / n;
  }
  return report;
}

std::string emit_task_csv(const MetricsReport& report) {
  std::string out = kTaskHeader;
  append_task_rows(out, report);
  return out;
}

std::string emit_task_csv(std::span<const MetricsReport> reports) {
  std::string out = kTaskHeader;
  for (const MetricsReport& report : reports) {
    append_task_rows(out, report);
  }
  return out;
}

std::string emit_job_csv(const MetricsReport& report) {
  std::string out = kJobHeader;
  append_job_rows(out, report);
  return out;
}

std::string emit_job_csv(std::span<const MetricsReport> reports) {
  std::string out = kJobHeader;
  for (const MetricsReport& report : reports) {
    append_job_rows(out, report);
  }
  return out;
}

std::string stage_csv_header() { return kStageHeader; }

std::string stage_csv_rows(std::span<const StageTiming> timings,
                           const std::string& config, int repetition) {
  std::string out;
  for (const StageTiming& timing : timings) {
    out += config + "," + std::to_string(repetition) + "," +
           std::to_string(timing.cycle_index) + "," + std::to_string(timing.sim_time_us) + "," +
           std::string(stage_name(timing.stage)) + "," + std::to_string(timing.duration_ns) +
           "," + std::to_string(timing.queue_length) + "\n";
  }
  return out;
}

std::string emit_stage_csv(std::span<const StageTiming> timings,
                           const std::string& config, int repetition) {
  return stage_csv_header() + stage_csv_rows(timings, config, repetition);
}

SummaryRow summarize(std::span<const MetricsReport> reports) {
  if (reports.empty()) {
    throw MetricsError("summarize needs at least one report");
  }
  SummaryRow row{reports.front().config, 0, 0, 0, 0};
  for (const MetricsReport& report : reports) {
    if (report.config != row.config) {
      throw MetricsError("summarize got mixed configs: " + row.config + " and " + report.config);
    }
    if (report.warm_up) {
      throw MetricsError("summarize got a warm-up report");
    }
    row.avg_jms_s += report.averages.jms_s;
    row.avg_njsl += report.averages.njsl;
    row.avg_jwt_s += report.averages.jwt_s;
    row.avg_trt_s += report.averages.trt_s;
  }
  double n = static_cast<double>(reports.size());
  row.avg_jms_s /= n;
  row.avg_njsl /= n;
  row.avg_jwt_s /= n;
  row.avg_trt_s /= n;
  return row;
}

std::string emit_summary_csv(std::span<const SummaryRow> rows) {
  std::string out = kSummaryHeader;
  for (const SummaryRow& row : rows) {
    out += row.config + "," + format_double(row.avg_jms_s, 3) + "," +
           format_double(row.avg_njsl, 3) + "," + format_double(row.avg_jwt_s, 3) + "," +
           format_double(row.avg_trt_s, 3) + "\n";
  }
  return out;
}

}  // namespace dcsched
