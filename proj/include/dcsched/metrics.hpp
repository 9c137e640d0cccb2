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

#include <span>
#include <string>
#include <vector>

#include "dcsched/engine.hpp"
#include "dcsched/workload.hpp"

namespace dcsched {

struct TaskMetrics {
  TaskId task_id;
  JobId job_id;
  Micros submit_us;
  Micros start_us;
  Micros finish_us;
  Micros wait_us;  // start - submit
  Micros exec_us;  // finish - start
  Micros trt_us;   // finish - submit = wait + exec
};

struct JobMetrics {
  JobId job_id;
  Micros jms_us;  // last finish - first submit
  double njsl;    // jms / critical path length, >= 1
  Micros jwt_us;  // first start - first submit
};

struct Averages {
  double trt_s = 0;
  double jms_s = 0;
  double njsl = 0;
  double jwt_s = 0;
};

// Per-task and per-job metrics of one recorded repetition.
struct MetricsReport {
  std::string config;
  int repetition = 0;
  bool warm_up = false;
  std::vector<TaskMetrics> tasks;  // ascending task_id
  std::vector<JobMetrics> jobs;    // ascending job_id
  Averages averages;
};

// Derives all metrics from a completed run. Throws MetricsError if any trace
// task has no record.
MetricsReport compute_metrics(const SimulationResult& result,
                              const WorkloadTrace& trace, std::string config,
                              int repetition);

// CSV emission. The single-report forms produce a header plus that report's
// rows; the span forms produce one header and rows for all reports in the
// given order. All integers are microseconds except duration_ns.
std::string emit_task_csv(const MetricsReport& report);
std::string emit_task_csv(std::span<const MetricsReport> reports);
std::string emit_job_csv(const MetricsReport& report);
std::string emit_job_csv(std::span<const MetricsReport> reports);
std::string emit_stage_csv(std::span<const StageTiming> timings,
                           const std::string& config, int repetition);
// Header-only prefix plus rows for (config, repetition, timings) groups.
std::string stage_csv_header();
std::string stage_csv_rows(std::span<const StageTiming> timings,
                           const std::string& config, int repetition);

// Mean over repetitions of each per-run average, for one configuration.
// Throws MetricsError on mixed configs or warm-up reports.
struct SummaryRow {
  std::string config;
  double avg_jms_s;
  double avg_njsl;
  double avg_jwt_s;
  double avg_trt_s;
};
SummaryRow summarize(std::span<const MetricsReport> reports);
std::string emit_summary_csv(std::span<const SummaryRow> rows);

}  // namespace dcsched
