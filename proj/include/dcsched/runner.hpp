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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dcsched/workload.hpp"

namespace dcsched {

// Experiment-runner arguments; defaults follow the standard invocation
// (-r 32 -w 4, all nine scheduler configurations).
struct RunArgs {
  int repeat = 32;
  int warm_up = 4;
  int parallelism = 1;
  std::vector<std::string> schedulers;  // empty = all nine
  std::string setup_path;
  std::string trace_path;
  std::uint64_t seed = 0;
  std::optional<ColumnLayout> columns;
  std::string output_dir = "data";
};

// Runs warm_up discarded plus repeat recorded simulations per scheduler
// configuration (repetition r uses seed + r), then writes tasks.csv,
// jobs.csv, stages.csv, and summary.csv into output_dir, overwriting
// existing files. Returns 0 on success; on failure prints a diagnostic to
// err and returns nonzero without writing any CSV.
int run_experiments(const RunArgs& args, std::ostream& err);

enum class MappingReport { kGroups, kOriginDiff, kEraDiff };

// Prints the requested aggregate of a scheduler-mapping file as CSV:
// per-scheduler group scores, or the top-k stages by origin/era difference.
// Returns 0 on success, nonzero (with a diagnostic on err) on parse errors.
int run_mapping_report(const std::string& mapping_path, MappingReport report,
                       int k, std::ostream& out, std::ostream& err);

}  // namespace dcsched
