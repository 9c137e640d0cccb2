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

#include <string>
#include <string_view>
#include <vector>

#include "dcsched/time.hpp"

namespace dcsched {

struct CpuSpec {
  int cpu_type_id;
  int cores;
  int clock_mhz;
};

// Built-in CPU types: 1 = 4 cores @ 4100 MHz, 2 = 2 cores @ 3500 MHz.
const std::vector<CpuSpec>& builtin_cpu_specs();

struct Machine {
  int machine_id = 0;  // dense, in file order
  std::string cluster_name;
  int cores = 0;
  int clock_mhz = 0;
  int available_cores = 0;  // mutable during simulation
};

struct Topology {
  std::vector<Machine> machines;
  int reference_clock_mhz = 0;  // max clock over machines

  int total_cores() const;
  int max_machine_cores() const;
};

// Parses a topology description:
//   {"clusters": [{"name": ..., "machines": [{"cpus": [cpu_type_id, ...]}]}]}
// A machine's cores are the sum and its clock the min over its listed CPUs.
// Throws ConfigError on unknown CPU types or an empty machine list.
Topology parse_setup(std::string_view json_text);

// Execution time of a reference-speed runtime on a machine of the given
// clock: runtime * reference_clock / clock, rounded half-up to a microsecond.
Micros effective_duration_us(Micros runtime_us, int machine_clock_mhz,
                             int reference_clock_mhz);

}  // namespace dcsched
