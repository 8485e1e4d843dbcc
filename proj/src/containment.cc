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

#include "rectpack/containment.h"

#include <chrono>
#include <optional>

#include "rectpack/containment_y.h"
#include "rectpack/perfect_packing.h"
#include "rectpack/subset_sums.h"

namespace rectpack {

ContainmentResult test_box(const Instance& instance, const Box& box,
                           const ContainmentConfig& config, const Deadline& deadline) {
  const auto started = std::chrono::steady_clock::now();
  ContainmentResult result;
  result.stats.boxes_tested = 1;

  XSearchConfig x_config;
  x_config.c_param = config.c_param > 0.0 ? config.c_param : default_c_param(instance);
  x_config.high_precision = config.high_precision;
  x_config.use_dominance = config.use_dominance;
  x_config.use_wasted_space = config.use_wasted_space;
  XSolver x_solver(instance, box, x_config);

  std::optional<SumSet> y_sums;
  if (config.high_precision) y_sums = separate_axis_sets(instance, box).second;
  YSearchConfig y_config;
  y_config.y_sums = y_sums ? &*y_sums : nullptr;

  const SolutionVisitor on_solution = [&](const Solution& solution) {
    result.solutions.push_back(solution);
    return result.solutions.size() < config.max_solutions;
  };
  const XVisitor on_assignment = [&](const XAssignment& assignment) {
    const PerfectInstance perfect = make_perfect(assignment, box, x_solver.order());
    return solve_y(instance, perfect, y_config, on_solution, result.stats, deadline);
  };
  try {
    result.x_outcome = x_solver.solve(on_assignment, result.stats, deadline);
  } catch (const TimeLimitReached&) {
    result.stats.cpu_time = std::chrono::steady_clock::now() - started;
    throw;
  }
  result.stats.cpu_time = std::chrono::steady_clock::now() - started;
  for (Solution& s : result.solutions) s.stats = result.stats;
  return result;
}

}  // namespace rectpack
