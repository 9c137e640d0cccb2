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

#include <cmath>
#include <cstdint>

namespace dcsched {

// The simulation clock is kept in integer microseconds so that event order
// is identical on every platform. Wall-clock stage measurements use
// nanoseconds.
using Micros = std::int64_t;
using Nanos = std::int64_t;

constexpr Micros kMicrosPerSecond = 1'000'000;

// Converts a non-negative duration in seconds to microseconds, rounding
// half-up.
inline Micros seconds_to_micros(double seconds) {
  return static_cast<Micros>(std::floor(seconds * 1e6 + 0.5));
}

inline double micros_to_seconds(Micros us) {
  return static_cast<double>(us) / 1e6;
}

// Exact half-up rounding of numerator/denominator for non-negative
// numerator and positive denominator.
inline std::int64_t div_round_half_up(std::int64_t numerator,
                                      std::int64_t denominator) {
  std::int64_t q = numerator / denominator;
  std::int64_t r = numerator % denominator;
  if (2 * r >= denominator) {
    ++q;
  }
  return q;
}

}  // namespace dcsched
