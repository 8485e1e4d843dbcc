// Copyright 2026 The rectpack Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Solver-independent checks. Nothing here reads search state: overlap is
// decided by pairwise interval tests, and the brute-force optimizer walks
// every integer placement directly.

#ifndef RECTPACK_VERIFY_H_
#define RECTPACK_VERIFY_H_

#include <string>
#include <vector>

#include "rectpack/model.h"

namespace rectpack {

enum class ViolationKind { kOverlap, kOutOfBounds, kBadRotation, kWrongCount };

std::string_view violation_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<int> rect_ids;
};

struct VerifyReport {
  bool valid = true;
  std::vector<Violation> violations;
  Area empty_cells = 0;
  // Percentage of the box left empty, 0..100.
  double empty_pct = 0.0;
};

VerifyReport verify(const Instance& instance, const Solution& solution);

// Empty-space percentage of `box` for the instance's total area.
double empty_percent(const Instance& instance, const Box& box);

struct BruteForceResult {
  Area area = 0;
  // Every box of minimum area, ascending by width. Transpose-symmetric
  // instances report only boxes with width <= height.
  std::vector<Box> boxes;
};

inline constexpr std::size_t kBruteForceMaxRects = 5;
inline constexpr Length kBruteForceMaxDim = 8;

// Exhaustive minimum-area search over every box and every integer placement
// and orientation. Refuses (std::invalid_argument) more than five rects or a
// dimension above `dim_cap`, and any `dim_cap` above eight.
BruteForceResult brute_force_optimal(const Instance& instance, Length dim_cap);

// Exhaustive containment test over integer placements; the engine behind
// brute_force_optimal, exposed for tests.
bool brute_force_fits(const Instance& instance, const Box& box);

}  // namespace rectpack

#endif  // RECTPACK_VERIFY_H_
