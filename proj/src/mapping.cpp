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

#include "dcsched/mapping.hpp"

#include <algorithm>
#include <cstdint>

#include "dcsched/errors.hpp"
#include "dcsched/time.hpp"

namespace dcsched {

namespace {

std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t comma = line.find(',', pos);
    cells.push_back(line.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return cells;
}

MatchLevel parse_cell(std::string_view cell, int line) {
  if (cell == "F") return MatchLevel::kFull;
  if (cell == "P") return MatchLevel::kPartial;
  if (cell == "N") return MatchLevel::kNone;
  throw ParseError("unknown match level '" + std::string(cell) + "' (expected F/P/N)", line);
}

SchedulerFeatures parse_features(std::string_view origin, std::string_view era,
                                 std::string_view deployment, int line) {
  SchedulerFeatures features{};
  if (origin == "A") {
    features.origin = Origin::kAcademia;
  } else if (origin == "I") {
    features.origin = Origin::kIndustry;
  } else {
    throw ParseError("unknown origin '" + std::string(origin) + "' (expected A/I)", line);
  }
  if (era == "O") {
    features.era = Era::kPre2010;
  } else if (era == "N") {
    features.era = Era::kPost2010;
  } else {
    throw ParseError("unknown era '" + std::string(era) + "' (expected O/N)", line);
  }
  if (deployment == "S") {
    features.deployment = Deployment::kSingleCluster;
  } else if (deployment == "M") {
    features.deployment = Deployment::kMultiCluster;
  } else {
    throw ParseError("unknown deployment '" + std::string(deployment) + "' (expected S/M)",
                     line);
  }
  return features;
}

}  // namespace

const SchedulerEntry* MappingMatrix::find(std::string_view name) const {
  for (const SchedulerEntry& entry : schedulers) {
    if (entry.name == name) return &entry;
  }
  return nullptr;
}

MappingMatrix parse_mapping(std::string_view csv_text) {
  MappingMatrix matrix;
  int line_no = 0;
  bool saw_header = false;
  std::size_t pos = 0;
  while (pos <= csv_text.size()) {
    std::size_t eol = csv_text.find('\n', pos);
    std::string_view line = csv_text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? csv_text.size() + 1 : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> cells = split_csv_line(line);
    if (!saw_header) {
      if (cells.size() != 4 + kStageCount || cells[0] != "scheduler") {
        throw ParseError("bad mapping header", line_no);
      }
      for (int i = 0; i < kStageCount; ++i) {
        if (cells[4 + i] != stage_name(stage_catalog()[i])) {
          throw ParseError("unexpected stage column '" + std::string(cells[4 + i]) + "'",
                           line_no);
        }
      }
      saw_header = true;
      continue;
    }
    if (cells.size() != 4 + kStageCount) {
      throw ParseError("expected " + std::to_string(4 + kStageCount) + " cells, got " +
                           std::to_string(cells.size()),
                       line_no);
    }
    SchedulerEntry entry;
    entry.name = std::string(cells[0]);
    entry.features = parse_features(cells[1], cells[2], cells[3], line_no);
    for (int i = 0; i < kStageCount; ++i) {
      entry.cells[i] = parse_cell(cells[4 + i], line_no);
    }
    matrix.schedulers.push_back(std::move(entry));
  }
  if (!saw_header) {
    throw ParseError("mapping file has no header");
  }
  return matrix;
}

namespace {

// Half-up rounded integer mean of {0,50,100} ratings, computed exactly.
int rounded_mean(std::int64_t rating_sum, std::int64_t count) {
  return static_cast<int>(div_round_half_up(rating_sum, count));
}

}  // namespace

int group_score(const MappingMatrix& matrix, std::string_view scheduler,
                StageGroup group) {
  const SchedulerEntry* entry = matrix.find(scheduler);
  if (entry == nullptr) {
    throw Error("unknown scheduler '" + std::string(scheduler) + "'");
  }
  std::int64_t sum = 0;
  const std::vector<StageId>& stages = group_stages(group);
  for (StageId stage : stages) {
    sum += static_cast<int>(entry->cell(stage));
  }
  return rounded_mean(sum, static_cast<std::int64_t>(stages.size()));
}

int feature_mean(const MappingMatrix& matrix, StageId stage,
                 const std::function<bool(const SchedulerFeatures&)>& predicate) {
  std::int64_t sum = 0;
  std::int64_t count = 0;
  for (const SchedulerEntry& entry : matrix.schedulers) {
    if (predicate(entry.features)) {
      sum += static_cast<int>(entry.cell(stage));
      ++count;
    }
  }
  if (count == 0) {
    throw Error("no scheduler matches the feature predicate");
  }
  return rounded_mean(sum, count);
}

std::vector<StageDiff> top_k_diff(const MappingMatrix& matrix, Partition partition,
                                  int k) {
  auto side_a = [partition](const SchedulerFeatures& f) {
    return partition == Partition::kOrigin ? f.origin == Origin::kAcademia
                                           : f.era == Era::kPre2010;
  };

  struct Row {
    StageId stage;
    std::int64_t sum_a, count_a, sum_b, count_b;
    // |sum_a/count_a - sum_b/count_b| compared exactly over the common
    // denominator count_a*count_b.
    std::int64_t diff_numerator() const {
      std::int64_t d = sum_a * count_b - sum_b * count_a;
      return d < 0 ? -d : d;
    }
  };

  std::vector<Row> rows;
  for (StageId stage : stage_catalog()) {
    Row row{stage, 0, 0, 0, 0};
    for (const SchedulerEntry& entry : matrix.schedulers) {
      if (side_a(entry.features)) {
        row.sum_a += static_cast<int>(entry.cell(stage));
        ++row.count_a;
      } else {
        row.sum_b += static_cast<int>(entry.cell(stage));
        ++row.count_b;
      }
    }
    if (row.count_a == 0 || row.count_b == 0) {
      throw Error("partition leaves one side empty");
    }
    rows.push_back(row);
  }

  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.diff_numerator() > b.diff_numerator();  // catalog order breaks ties
  });

  std::vector<StageDiff> result;
  for (const Row& row : rows) {
    if (static_cast<int>(result.size()) >= k) break;
    result.push_back({row.stage, rounded_mean(row.sum_a, row.count_a),
                      rounded_mean(row.sum_b, row.count_b)});
  }
  return result;
}

int bucketize(int percent) {
  if (percent < 0 || percent > 100) {
    throw Error("percentage out of range: " + std::to_string(percent));
  }
  if (percent < 25) return 0;
  if (percent < 50) return 1;
  if (percent < 75) return 2;
  return 3;
}

}  // namespace dcsched
