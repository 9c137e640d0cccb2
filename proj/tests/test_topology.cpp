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

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "dcsched/errors.hpp"
#include "dcsched/rng.hpp"
#include "dcsched/topology.hpp"

using namespace dcsched;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("parse_setup reads a one-machine topology") {
  Topology topology = parse_setup(R"({"clusters":[{"name":"c0","machines":[{"cpus":[1]}]}]})");
  REQUIRE(topology.machines.size() == 1);
  CHECK(topology.machines[0].machine_id == 0);
  CHECK(topology.machines[0].cluster_name == "c0");
  CHECK(topology.machines[0].cores == 4);
  CHECK(topology.machines[0].clock_mhz == 4100);
  CHECK(topology.machines[0].available_cores == 4);
  CHECK(topology.reference_clock_mhz == 4100);
}

TEST_CASE("parse_setup reads the bundled 32-machine topology") {
  Topology topology = parse_setup(read_file(std::string(DCSCHED_DATA_DIR) + "/setup_paper.json"));
  REQUIRE(topology.machines.size() == 32);
  CHECK(topology.total_cores() == 96);
  CHECK(topology.reference_clock_mhz == 4100);
  CHECK(topology.max_machine_cores() == 4);
  for (int i = 0; i < 16; ++i) {
    CHECK(topology.machines[i].cores == 4);
    CHECK(topology.machines[i].clock_mhz == 4100);
  }
  for (int i = 16; i < 32; ++i) {
    CHECK(topology.machines[i].cores == 2);
    CHECK(topology.machines[i].clock_mhz == 3500);
    CHECK(topology.machines[i].machine_id == i);
  }
}

TEST_CASE("parse_setup error paths") {
  CHECK_THROWS_AS(parse_setup("not json"), ConfigError);
  CHECK_THROWS_AS(parse_setup(R"({"noclusters":[]})"), ConfigError);
  CHECK_THROWS_AS(parse_setup(R"({"clusters":[]})"), ConfigError);
  CHECK_THROWS_AS(parse_setup(R"({"clusters":[{"name":"c","machines":[]}]})"), ConfigError);
  CHECK_THROWS_WITH_AS(
      parse_setup(R"({"clusters":[{"name":"c","machines":[{"cpus":[9]}]}]})"),
      doctest::Contains("UNKNOWN_CPU"), ConfigError);
  CHECK_THROWS_AS(parse_setup(R"({"clusters":[{"name":"c","machines":[{"cpus":[]}]}]})"),
                  ConfigError);
}

TEST_CASE("multi-cpu machines sum cores and take the slowest clock") {
  Topology topology = parse_setup(R"({"clusters":[{"name":"c","machines":[{"cpus":[1,2]}]}]})");
  CHECK(topology.machines[0].cores == 6);
  CHECK(topology.machines[0].clock_mhz == 3500);
}

TEST_CASE("effective_duration_us scales by clock ratio, half-up") {
  // Identity on the reference clock.
  CHECK(effective_duration_us(10 * kMicrosPerSecond, 4100, 4100) == 10 * kMicrosPerSecond);
  CHECK(effective_duration_us(kMicrosPerSecond, 3500, 3500) == kMicrosPerSecond);
  // 10 s * 4100/3500 = 11.714285714... s
  CHECK(effective_duration_us(10 * kMicrosPerSecond, 3500, 4100) == 11'714'286);
  CHECK(effective_duration_us(1, 3500, 4100) == 1);  // 1.17 us rounds to 1
  CHECK(effective_duration_us(7, 4000, 4100) == 7);  // 7.175 -> 7
  CHECK(effective_duration_us(10, 4000, 4100) == 10); // 10.25 -> 10
  CHECK(effective_duration_us(2, 4000, 4100) == 2);  // 2.05 -> 2
  CHECK(effective_duration_us(1'000'000, 2, 3) == 1'500'000);
  CHECK(effective_duration_us(1, 2, 3) == 2);  // exactly 1.5 rounds up
}

TEST_CASE("parse_setup never crashes on garbage") {
  SplitMix64 rng(88);
  const std::string charset = "{}[]\":,clustermachinespu 12x";
  for (int round = 0; round < 1000; ++round) {
    std::string text;
    std::size_t length = rng.uniform_below(100);
    for (std::size_t i = 0; i < length; ++i) {
      text += charset[rng.uniform_below(charset.size())];
    }
    try {
      parse_setup(text);
    } catch (const ConfigError&) {
    }
  }
}

TEST_CASE("effective duration never undercuts the reference runtime") {
  SplitMix64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    Micros runtime = 1 + static_cast<Micros>(rng.uniform_below(100'000'000));
    int clock = rng.uniform_below(2) == 0 ? 4100 : 3500;
    CHECK(effective_duration_us(runtime, clock, 4100) >= runtime);
  }
}
