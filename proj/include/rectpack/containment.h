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

// Containment test for one box: x-stage, perfect-packing transform, y-stage.

#ifndef RECTPACK_CONTAINMENT_H_
#define RECTPACK_CONTAINMENT_H_

#include <cstddef>
#include <vector>

#include "rectpack/containment_x.h"
#include "rectpack/model.h"

namespace rectpack {

struct ContainmentConfig {
  // Interval-size factor; 0 picks default_c_param.
  double c_param = 0.0;
  bool high_precision = false;
  // Stop after this many packings.
  std::size_t max_solutions = 1;
  bool use_dominance = true;
  bool use_wasted_space = true;
};

struct ContainmentResult {
  std::vector<Solution> solutions;
  SearchStats stats;
  XSearchOutcome x_outcome;

  bool feasible() const { return !solutions.empty(); }
};

ContainmentResult test_box(const Instance& instance, const Box& box,
                           const ContainmentConfig& config, const Deadline& deadline = Deadline());

}  // namespace rectpack

#endif  // RECTPACK_CONTAINMENT_H_
