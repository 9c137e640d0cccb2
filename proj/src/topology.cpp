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

#include "dcsched/topology.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "dcsched/errors.hpp"

namespace dcsched {

const std::vector<CpuSpec>& builtin_cpu_specs() {
  static const std::vector<CpuSpec> specs = {
      {1, 4, 4100},
      {2, 2, 3500},
  };
  return specs;
}

int Topology::total_cores() const {
  int total = 0;
  for (const Machine& machine : machines) total += machine.cores;
  return total;
}

int Topology::max_machine_cores() const {
  int best = 0;
  for (const Machine& machine : machines) best = std::max(best, machine.cores);
  return best;
}

namespace {

const CpuSpec& cpu_spec(int cpu_type_id) {
  for (const CpuSpec& spec : builtin_cpu_specs()) {
    if (spec.cpu_type_id == cpu_type_id) return spec;
  }
  throw ConfigError("UNKNOWN_CPU: cpu type " + std::to_string(cpu_type_id));
}

}  // namespace

Topology parse_setup(std::string_view json_text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid topology file: ") + e.what());
  }
  if (!root.is_object() || !root.contains("clusters") || !root["clusters"].is_array()) {
    throw ConfigError("topology file needs a top-level \"clusters\" array");
  }

  Topology topology;
  for (const auto& cluster : root["clusters"]) {
    std::string name = cluster.value("name", std::string{});
    if (!cluster.contains("machines") || !cluster["machines"].is_array()) {
      throw ConfigError("cluster '" + name + "' needs a \"machines\" array");
    }
    for (const auto& machine_json : cluster["machines"]) {
      if (!machine_json.contains("cpus") || !machine_json["cpus"].is_array() ||
          machine_json["cpus"].empty()) {
        throw ConfigError("machine in cluster '" + name + "' needs a non-empty \"cpus\" array");
      }
      Machine machine;
      machine.machine_id = static_cast<int>(topology.machines.size());
      machine.cluster_name = name;
      machine.clock_mhz = 0;
      for (const auto& cpu_json : machine_json["cpus"]) {
        if (!cpu_json.is_number_integer()) {
          throw ConfigError("cpu entries must be integer type ids");
        }
        const CpuSpec& spec = cpu_spec(cpu_json.get<int>());
        machine.cores += spec.cores;
        machine.clock_mhz = machine.clock_mhz == 0 ? spec.clock_mhz
                                                   : std::min(machine.clock_mhz, spec.clock_mhz);
      }
      machine.available_cores = machine.cores;
      topology.machines.push_back(std::move(machine));
    }
  }
  if (topology.machines.empty()) {
    throw ConfigError("topology contains no machines");
  }
  for (const Machine& machine : topology.machines) {
    topology.reference_clock_mhz = std::max(topology.reference_clock_mhz, machine.clock_mhz);
  }
  return topology;
}

Micros effective_duration_us(Micros runtime_us, int machine_clock_mhz,
                             int reference_clock_mhz) {
  return div_round_half_up(runtime_us * reference_clock_mhz, machine_clock_mhz);
}

}  // namespace dcsched
