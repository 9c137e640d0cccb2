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

//
// A deliberately plain re-implementation of the simulation semantics, used
// as an oracle. It shares only the input data structures with the simulator
// proper: the event handling, eligibility, sorting, machine selection,
// clock scaling, and the random generator are all written out again from
// their definitions.
//

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "dcsched/pipeline.hpp"
#include "dcsched/topology.hpp"
#include "dcsched/workload.hpp"

namespace dcsched::testing {

struct ReplayRecord {
  std::int64_t start_us;
  std::int64_t finish_us;
  int machine_id;
};

namespace replay_detail {

struct Rng {
  std::uint64_t state;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }
};

inline std::uint64_t hash_name(const std::string& name) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace replay_detail

// Replays a workload step by step and returns per-task start/finish/machine.
// Throws std::runtime_error when tasks remain blocked at the end.
inline std::map<std::int64_t, ReplayRecord> replay_brute_force(
    const WorkloadTrace& trace, const Topology& topology,
    const SchedulerConfig& config, std::uint64_t seed) {
  replay_detail::Rng rng{seed ^ replay_detail::hash_name(config.name)};

  // Pending arrivals, ascending by (time, task_id).
  std::vector<std::pair<std::int64_t, std::int64_t>> arrivals;
  for (const auto& [id, task] : trace.tasks) {
    arrivals.emplace_back(task.submit_us, id);
  }
  std::sort(arrivals.begin(), arrivals.end());
  std::size_t next_arrival = 0;

  std::vector<int> free_cores;
  for (const Machine& machine : topology.machines) {
    free_cores.push_back(machine.cores);
  }
  const int ref_clock = topology.reference_clock_mhz;

  std::set<std::int64_t> queued;
  std::map<std::int64_t, std::int64_t> finish_of_running;  // task -> finish
  std::set<std::int64_t> done;
  std::map<std::int64_t, ReplayRecord> records;

  while (next_arrival < arrivals.size() || !finish_of_running.empty()) {
    // Next event time: earliest arrival or completion.
    std::int64_t t = -1;
    if (next_arrival < arrivals.size()) t = arrivals[next_arrival].first;
    for (const auto& [id, finish] : finish_of_running) {
      (void)id;
      if (t < 0 || finish < t) t = finish;
    }

    // Completions at t release cores before arrivals and the cycle.
    std::vector<std::int64_t> completed;
    for (const auto& [id, finish] : finish_of_running) {
      if (finish == t) completed.push_back(id);
    }
    for (std::int64_t id : completed) {
      free_cores[records.at(id).machine_id] += trace.tasks.at(id).cores;
      finish_of_running.erase(id);
      done.insert(id);
    }
    while (next_arrival < arrivals.size() && arrivals[next_arrival].first == t) {
      queued.insert(arrivals[next_arrival].second);
      ++next_arrival;
    }

    // One scheduling cycle. Jobs with queued tasks, ordered by
    // (job submit, job id); their queued tasks in ascending id order.
    std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, const Job*>> jobs;
    {
      std::set<std::int64_t> job_ids;
      for (std::int64_t id : queued) job_ids.insert(trace.tasks.at(id).job_id);
      for (std::int64_t job_id : job_ids) {
        const Job& job = trace.jobs.at(job_id);
        jobs.push_back({{job.submit_us, job_id}, &job});
      }
      std::sort(jobs.begin(), jobs.end());
    }
    std::vector<std::int64_t> eligible;
    for (const auto& [key, job] : jobs) {
      for (std::int64_t id : job->task_ids) {
        if (!queued.count(id)) continue;
        bool ready = true;
        for (std::int64_t parent : trace.tasks.at(id).parents) {
          if (!done.count(parent)) ready = false;
        }
        if (ready) eligible.push_back(id);
      }
    }

    switch (config.task_sort) {
      case TaskSortPolicy::kFifo:
        std::sort(eligible.begin(), eligible.end(),
                  [&](std::int64_t a, std::int64_t b) {
                    const Task& ta = trace.tasks.at(a);
                    const Task& tb = trace.tasks.at(b);
                    if (ta.submit_us != tb.submit_us) return ta.submit_us < tb.submit_us;
                    return a < b;
                  });
        break;
      case TaskSortPolicy::kSrtf:
        std::sort(eligible.begin(), eligible.end(),
                  [&](std::int64_t a, std::int64_t b) {
                    const Task& ta = trace.tasks.at(a);
                    const Task& tb = trace.tasks.at(b);
                    if (ta.runtime_us != tb.runtime_us) return ta.runtime_us < tb.runtime_us;
                    if (ta.submit_us != tb.submit_us) return ta.submit_us < tb.submit_us;
                    return a < b;
                  });
        break;
      case TaskSortPolicy::kRandom:
        for (std::size_t i = eligible.size(); i > 1; --i) {
          std::size_t j = static_cast<std::size_t>(rng.below(i));
          std::swap(eligible[i - 1], eligible[j]);
        }
        break;
    }

    for (std::int64_t id : eligible) {
      const Task& task = trace.tasks.at(id);
      int chosen = -1;
      for (int m = 0; m < static_cast<int>(topology.machines.size()); ++m) {
        if (topology.machines[m].cores < task.cores) continue;
        if (free_cores[m] < task.cores) continue;
        if (chosen < 0) {
          chosen = m;
          if (config.allocation == AllocationPolicy::kFirstFit) break;
          continue;
        }
        if (config.allocation == AllocationPolicy::kBestFit &&
            free_cores[m] - task.cores < free_cores[chosen] - task.cores) {
          chosen = m;
        }
        if (config.allocation == AllocationPolicy::kWorstFit &&
            free_cores[m] > free_cores[chosen]) {
          chosen = m;
        }
      }
      if (chosen < 0) continue;
      free_cores[chosen] -= task.cores;
      // Half-up scaling of the reference runtime to the chosen clock.
      std::int64_t numerator = task.runtime_us * ref_clock;
      std::int64_t clock = topology.machines[chosen].clock_mhz;
      std::int64_t duration = numerator / clock;
      if (2 * (numerator % clock) >= clock) ++duration;
      std::int64_t finish = t + duration;
      records[id] = {t, finish, chosen};
      finish_of_running[id] = finish;
      queued.erase(id);
    }
  }

  if (!queued.empty()) {
    throw std::runtime_error("replayer: tasks stuck in queue");
  }
  return records;
}

}  // namespace dcsched::testing
