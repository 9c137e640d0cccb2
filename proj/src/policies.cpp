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

#include "dcsched/policies.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace dcsched {

std::vector<const Task*> t1_dependencies_finished(
    const std::vector<const Task*>& queued,
    const std::unordered_set<TaskId>& finished) {
  std::vector<const Task*> eligible;
  eligible.reserve(queued.size());
  for (const Task* task : queued) {
    bool ready = true;
    for (TaskId parent : task->parents) {
      if (!finished.contains(parent)) {
        ready = false;
        break;
      }
    }
    if (ready) {
      eligible.push_back(task);
    }
  }
  return eligible;
}

void t2_sort(std::vector<const Task*>& tasks, TaskSortPolicy policy,
             SplitMix64& rng) {
  switch (policy) {
    case TaskSortPolicy::kFifo:
      std::sort(tasks.begin(), tasks.end(), [](const Task* a, const Task* b) {
        return std::tie(a->submit_us, a->task_id) < std::tie(b->submit_us, b->task_id);
      });
      break;
    case TaskSortPolicy::kSrtf:
      std::sort(tasks.begin(), tasks.end(), [](const Task* a, const Task* b) {
        return std::tie(a->runtime_us, a->submit_us, a->task_id) <
               std::tie(b->runtime_us, b->submit_us, b->task_id);
      });
      break;
    case TaskSortPolicy::kRandom:
      // Fisher-Yates, descending index; one uniform draw per index.
      for (std::size_t i = tasks.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.uniform_below(i));
        std::swap(tasks[i - 1], tasks[j]);
      }
      break;
  }
}

std::vector<int> r4_sufficient_capacity(const std::vector<int>& machines,
                                        const Topology& topology,
                                        const Task& task) {
  std::vector<int> fitting;
  fitting.reserve(machines.size());
  for (int machine_id : machines) {
    if (topology.machines[machine_id].available_cores >= task.cores) {
      fitting.push_back(machine_id);
    }
  }
  return fitting;
}

std::optional<int> r5_select(const std::vector<int>& machines,
                             const Topology& topology, const Task& task,
                             AllocationPolicy policy) {
  if (machines.empty()) {
    return std::nullopt;
  }
  switch (policy) {
    case AllocationPolicy::kFirstFit:
      return machines.front();
    case AllocationPolicy::kBestFit: {
      int best = machines.front();
      int best_slack = topology.machines[best].available_cores - task.cores;
      for (int machine_id : machines) {
        int slack = topology.machines[machine_id].available_cores - task.cores;
        if (slack < best_slack) {
          best = machine_id;
          best_slack = slack;
        }
      }
      return best;
    }
    case AllocationPolicy::kWorstFit: {
      int best = machines.front();
      int best_avail = topology.machines[best].available_cores;
      for (int machine_id : machines) {
        int avail = topology.machines[machine_id].available_cores;
        if (avail > best_avail) {
          best = machine_id;
          best_avail = avail;
        }
      }
      return best;
    }
  }
  return std::nullopt;
}

}  // namespace dcsched
