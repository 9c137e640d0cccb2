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

#include "dcsched/runner.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "dcsched/engine.hpp"
#include "dcsched/errors.hpp"
#include "dcsched/mapping.hpp"
#include "dcsched/metrics.hpp"
#include "dcsched/topology.hpp"

namespace dcsched {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot write file: " + path.string());
  }
  out << content;
}

struct SimJob {
  int config_index;
  int repetition;  // recorded repetition index, or warm-up index
  bool warm_up;
};

struct SimOutcome {
  std::optional<MetricsReport> report;
  std::vector<StageTiming> timings;
  std::string error;
};

}  // namespace

int run_experiments(const RunArgs& args, std::ostream& err) {
  WorkloadTrace trace;
  Topology topology;
  std::vector<SchedulerConfig> configs;
  try {
    if (args.repeat < 1 || args.warm_up < 0 || args.parallelism < 1) {
      throw Error("repeat must be >= 1, warm-up >= 0, parallelism >= 1");
    }
    topology = parse_setup(read_file(args.setup_path));
    std::string trace_text = read_file(args.trace_path);
    std::string source = std::filesystem::path(args.trace_path).filename().string();
    trace = parse_trace(trace_text, source,
                        args.columns ? *args.columns : ColumnLayout{});
    if (args.schedulers.empty()) {
      configs = SchedulerConfig::all();
    } else {
      for (const std::string& name : args.schedulers) {
        configs.push_back(SchedulerConfig::parse(name));
      }
    }
    for (const Violation& violation : validate_workload(trace, topology)) {
      if (violation.is_warning()) {
        err << "warning: " << violation.to_string() << "\n";
      } else {
        throw Error("workload invalid: " + violation.to_string());
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  // One slot per simulation; warm-ups run the same way but keep no results.
  std::vector<SimJob> jobs;
  for (int c = 0; c < static_cast<int>(configs.size()); ++c) {
    for (int w = 0; w < args.warm_up; ++w) {
      jobs.push_back({c, w, true});
    }
    for (int r = 0; r < args.repeat; ++r) {
      jobs.push_back({c, r, false});
    }
  }
  std::vector<SimOutcome> outcomes(jobs.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t index = next.fetch_add(1);
      if (index >= jobs.size()) return;
      const SimJob& job = jobs[index];
      SimOutcome& outcome = outcomes[index];
      const SchedulerConfig& config = configs[job.config_index];
      try {
        SimState state = create_simulation(trace, topology, config,
                                           args.seed + static_cast<std::uint64_t>(job.repetition));
        SimulationResult result = run_to_completion(state);
        if (!job.warm_up) {
          outcome.report = compute_metrics(result, trace, config.name, job.repetition);
          outcome.timings = std::move(result.timings);
        }
      } catch (const std::exception& e) {
        outcome.error = config.name + " repetition " + std::to_string(job.repetition) +
                        (job.warm_up ? " (warm-up)" : "") + ": " + e.what();
      }
    }
  };
  {
    std::vector<std::thread> pool;
    int threads = std::min<int>(args.parallelism, static_cast<int>(jobs.size()));
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& thread : pool) thread.join();
  }

  for (const SimOutcome& outcome : outcomes) {
    if (!outcome.error.empty()) {
      err << "error: " << outcome.error << "\n";
      return 1;
    }
  }

  // Deterministic assembly in (config, repetition) order.
  std::vector<MetricsReport> reports;
  std::string stage_csv = stage_csv_header();
  std::vector<SummaryRow> summary;
  for (int c = 0; c < static_cast<int>(configs.size()); ++c) {
    std::size_t config_begin = reports.size();
    for (std::size_t index = 0; index < jobs.size(); ++index) {
      if (jobs[index].config_index != c || jobs[index].warm_up) continue;
      reports.push_back(std::move(*outcomes[index].report));
      stage_csv += stage_csv_rows(outcomes[index].timings, configs[c].name,
                                  jobs[index].repetition);
    }
    summary.push_back(summarize(
        std::span<const MetricsReport>(reports).subspan(config_begin, args.repeat)));
  }

  try {
    std::filesystem::path out_dir(args.output_dir);
    std::filesystem::create_directories(out_dir);
    write_file(out_dir / "tasks.csv", emit_task_csv(std::span<const MetricsReport>(reports)));
    write_file(out_dir / "jobs.csv", emit_job_csv(std::span<const MetricsReport>(reports)));
    write_file(out_dir / "stages.csv", stage_csv);
    write_file(out_dir / "summary.csv", emit_summary_csv(summary));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

namespace {

std::string feature_codes(const SchedulerFeatures& features) {
  std::string out;
  out += features.origin == Origin::kAcademia ? "A" : "I";
  out += ',';
  out += features.era == Era::kPre2010 ? "O" : "N";
  out += ',';
  out += features.deployment == Deployment::kSingleCluster ? "S" : "M";
  return out;
}

}  // namespace

int run_mapping_report(const std::string& mapping_path, MappingReport report,
                       int k, std::ostream& out, std::ostream& err) {
  MappingMatrix matrix;
  try {
    matrix = parse_mapping(read_file(mapping_path));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  switch (report) {
    case MappingReport::kGroups:
      out << "scheduler,origin,era,deployment,J,T,M,R\n";
      for (const SchedulerEntry& entry : matrix.schedulers) {
        out << entry.name << "," << feature_codes(entry.features);
        for (StageGroup group :
             {StageGroup::J, StageGroup::T, StageGroup::M, StageGroup::R}) {
          out << "," << group_score(matrix, entry.name, group);
        }
        out << "\n";
      }
      break;
    case MappingReport::kOriginDiff:
      out << "stage,academia,industry\n";
      for (const StageDiff& diff : top_k_diff(matrix, Partition::kOrigin, k)) {
        out << stage_name(diff.stage) << "," << diff.mean_a << "," << diff.mean_b << "\n";
      }
      break;
    case MappingReport::kEraDiff:
      out << "stage,pre2010,post2010\n";
      for (const StageDiff& diff : top_k_diff(matrix, Partition::kEra, k)) {
        out << stage_name(diff.stage) << "," << diff.mean_a << "," << diff.mean_b << "\n";
      }
      break;
  }
  return 0;
}

}  // namespace dcsched
