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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dcsched/errors.hpp"
#include "dcsched/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"dcsched: trace-driven datacenter-scheduling simulator"};

  dcsched::RunArgs args;
  std::string columns_spec;
  app.add_option("-r,--repeat", args.repeat,
                 "Recorded repetitions per scheduler configuration")
      ->capture_default_str();
  app.add_option("-w,--warm-up", args.warm_up,
                 "Discarded warm-up runs per scheduler configuration")
      ->capture_default_str();
  app.add_option("-p,--parallelism", args.parallelism,
                 "Simulations to run in parallel")
      ->capture_default_str();
  app.add_option("--schedulers", args.schedulers,
                 "Scheduler configurations to test, e.g. SRTF-BESTFIT "
                 "(default: all nine)");
  app.add_option("-s,--setup", args.setup_path, "Topology description file");
  app.add_option("trace", args.trace_path, "Workload trace file");
  app.add_option("--seed", args.seed, "Base seed; repetition r uses seed + r")
      ->capture_default_str();
  app.add_option("--columns", columns_spec,
                 "Column indices of task_id,submit,runtime,cores,job_id,parents "
                 "for non-canonical trace layouts");
  app.add_option("--out", args.output_dir, "Output directory for the CSV files")
      ->capture_default_str();

  auto* mapping = app.add_subcommand(
      "mapping", "Aggregate reports over a scheduler-mapping file");
  std::string report_name = "groups";
  std::string mapping_file = "data/mapping_sc18.csv";
  int top_k = 10;
  mapping->add_option("report", report_name, "groups, origin-diff, or era-diff")
      ->check(CLI::IsMember({"groups", "origin-diff", "era-diff"}));
  mapping->add_option("-f,--file", mapping_file, "Mapping CSV file")
      ->capture_default_str();
  mapping->add_option("-k,--top", top_k, "Rows in the difference reports")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (mapping->parsed()) {
    dcsched::MappingReport report = dcsched::MappingReport::kGroups;
    if (report_name == "origin-diff") report = dcsched::MappingReport::kOriginDiff;
    if (report_name == "era-diff") report = dcsched::MappingReport::kEraDiff;
    return dcsched::run_mapping_report(mapping_file, report, top_k, std::cout,
                                       std::cerr);
  }

  if (args.trace_path.empty() || args.setup_path.empty()) {
    std::cerr << "error: a trace file and -s <setup.json> are required "
                 "(see --help)\n";
    return 1;
  }
  if (!columns_spec.empty()) {
    try {
      args.columns = dcsched::ColumnLayout::parse(columns_spec);
    } catch (const dcsched::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return dcsched::run_experiments(args, std::cerr);
}
