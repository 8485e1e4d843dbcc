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

#include <doctest.h>

#include <random>
#include <set>

#include "oracles.h"
#include "rectpack/bbox.h"
#include "rectpack/benchmarks.h"
#include "rectpack/verify.h"

using namespace rectpack;

namespace {

Instance oriented(std::vector<std::pair<Length, Length>> dims) {
  Instance inst;
  for (const auto& [w, h] : dims) {
    inst.rects.push_back({static_cast<int>(inst.rects.size()), w, h, false});
  }
  return inst;
}

std::set<Box> normalized(const std::vector<Box>& boxes) {
  std::set<Box> out;
  for (Box b : boxes) {
    if (b.width > b.height) std::swap(b.width, b.height);
    out.insert(b);
  }
  return out;
}

std::set<Box> tiler_optimal_boxes(const Instance& inst, Length area) {
  std::set<Box> out;
  for (Length w = 1; w <= area; ++w) {
    if (area % w == 0 && oracle::tiler_fits(inst, w, area / w)) out.insert({w, area / w});
  }
  return normalized({out.begin(), out.end()});
}

}  // namespace

TEST_CASE("precision selection") {
  const Instance sq = generate(Family::kConsecutiveSquares, 5);
  CHECK_FALSE(use_high_precision(sq, PrecisionMode::kAuto));
  CHECK(use_high_precision(sq, PrecisionMode::kHigh));
  CHECK(use_high_precision(generate(Family::kHighPrecision, 3), PrecisionMode::kAuto));
  CHECK_FALSE(use_high_precision(generate(Family::kHighPrecision, 3), PrecisionMode::kLow));
  CHECK(use_high_precision(oriented({{300, 1}}), PrecisionMode::kAuto));
  CHECK_FALSE(use_high_precision(oriented({{256, 1}}), PrecisionMode::kAuto));
}

TEST_CASE("greedy upper bound") {
  for (int n = 1; n <= 10; ++n) {
    for (Family f : {Family::kConsecutiveSquares, Family::kUnorientedConsecutive,
                     Family::kOrientedEqualPerimeter}) {
      const Instance inst = generate(f, n);
      const Solution s = greedy_upper_bound(inst);
      CHECK(verify(inst, s).valid);
      CHECK(oracle::grid_valid(inst, s));
    }
  }
  const Solution s = greedy_upper_bound(generate(Family::kConsecutiveSquares, 3));
  CHECK(s.box.height == 3);
  CHECK_THROWS_AS(greedy_upper_bound(Instance{}), std::invalid_argument);
}

TEST_CASE("height lower bound") {
  const Instance sq2 = generate(Family::kConsecutiveSquares, 2);
  CHECK(min_height_for_width(sq2, 3) == 2);
  CHECK(min_height_for_width(sq2, 2) == 3);
  CHECK_FALSE(min_height_for_width(sq2, 1).has_value());
  CHECK(widest_rect(sq2) == 2);
  CHECK(widest_rect(generate(Family::kUnorientedConsecutive, 3)) == 3);
  CHECK(widest_rect(generate(Family::kOrientedEqualPerimeter, 3)) == 3);

  const Instance pair = oriented({{4, 2}, {3, 5}});
  CHECK_FALSE(brute_force_fits(pair, {5, 6}));
  CHECK(min_height_for_width(pair, 5) == 7);
}

TEST_CASE("height lower bound never exceeds a real packing") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const Instance inst = oracle::random_instance(rng, 4, 4);
    const Length w = std::uniform_int_distribution<Length>(1, 8)(rng);
    const auto bound = min_height_for_width(inst, w);
    Length h = 1;
    while (h <= 16 && !oracle::tiler_fits(inst, w, h)) ++h;
    if (h > 16) {
      continue;
    }
    REQUIRE(bound.has_value());
    CHECK(*bound <= h);
  }
}

TEST_CASE("mutex filter") {
  const Instance inst = oriented({{3, 2}, {4, 1}});
  CHECK_FALSE(mutex_compatible(7, 3, inst));
  CHECK(mutex_compatible(4, 1, inst));
  CHECK(mutex_compatible(7, 2, inst));
  // 4 = 4 or 1 + 3: no unique generator.
  const Instance multi = oriented({{1, 2}, {3, 1}, {4, 1}});
  CHECK(mutex_compatible(4, 3, multi));
}

TEST_CASE("learned height floor") {
  const Instance inst = oriented({{1, 5}, {1, 3}, {1, 2}});
  const std::vector<int> order{0, 1, 2};
  CHECK(learned_height_floor(inst, order, 0, 10).values() == std::vector<Length>{0, 5});
  CHECK(learned_height_floor(inst, order, 1, 10).values() == std::vector<Length>{0, 3, 5, 8});
  CHECK(learned_height_floor(inst, order, 2, 10).values() ==
        std::vector<Length>{0, 2, 3, 5, 7, 8, 10});
  CHECK_THROWS_AS(learned_height_floor(inst, order, 3, 10), ContractViolation);
}

TEST_CASE("candidate queue") {
  CandidateQueue q;
  q.push(5, 4);
  q.push(2, 10);
  q.push(3, 7);
  CHECK_THROWS_AS(q.push(5, 9), ContractViolation);
  CHECK(q.pop() == Candidate{20, 2, 10});
  CHECK(q.pop() == Candidate{20, 5, 4});
  q.push(5, 5);
  CHECK(q.pop() == Candidate{21, 3, 7});
  CHECK(q.pop() == Candidate{25, 5, 5});
  CHECK(q.empty());
}

TEST_CASE("known optima") {
  const auto sq7 = enumerate_all_optimal(generate(Family::kConsecutiveSquares, 7));
  CHECK(sq7.optimal_area == 154);
  CHECK(normalized(sq7.optimal_boxes) == std::set<Box>{{7, 22}, {11, 14}});
  CHECK(sq7.solutions.size() == sq7.optimal_boxes.size());

  const auto ep5 = enumerate_all_optimal(generate(Family::kOrientedEqualPerimeter, 5));
  CHECK(normalized(ep5.optimal_boxes) == std::set<Box>{{6, 7}});

  const auto hp4 = enumerate_all_optimal(generate(Family::kHighPrecision, 4));
  CHECK(hp4.high_precision);
  CHECK(normalized(hp4.optimal_boxes) == std::set<Box>{{30, 100}, {50, 60}});
}

TEST_CASE("tested boxes lie between the area bounds") {
  for (Family f : {Family::kConsecutiveSquares, Family::kUnorientedConsecutive,
                   Family::kHighPrecision}) {
    const Instance inst = generate(f, 6);
    std::vector<Length> dims;
    for (const Rect& r : inst.rects) {
      dims.push_back(r.width);
      dims.push_back(r.height);
    }
    std::vector<Box> tested;
    EnumerateConfig config;
    config.on_box = [&](const Box& b, bool) { tested.push_back(b); };
    const auto r = enumerate_all_optimal(inst, config);
    CHECK(tested.size() == r.stats.boxes_tested);
    for (const Box& b : tested) {
      CHECK(b.area() >= total_area(inst));
      CHECK(b.area() <= r.optimal_area);
      if (r.high_precision) {
        const auto sums = oracle::subset_sums(dims, b.width + b.height);
        CHECK(sums.count(b.width) == 1);
        CHECK(sums.count(b.height) == 1);
      }
    }
  }
}

TEST_CASE("anytime search") {
  std::vector<Area> seen;
  const Solution s5 = anytime_search(generate(Family::kConsecutiveSquares, 5),
                                     [&](const Solution& s) { seen.push_back(s.box.area()); });
  CHECK(s5.box.area() == 60);
  REQUIRE_FALSE(seen.empty());
  CHECK(seen.back() == 60);
  for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i] < seen[i - 1]);

  const auto noop = [](const Solution&) {};
  CHECK(anytime_search(generate(Family::kConsecutiveSquares, 4), noop).box.area() == 35);
  CHECK(anytime_search(generate(Family::kConsecutiveSquares, 1), noop).box.area() == 1);
}

TEST_CASE("modes agree on the optimum") {
  const auto noop = [](const Solution&) {};
  for (int n = 1; n <= 8; ++n) {
    for (Family f : {Family::kConsecutiveSquares, Family::kOrientedEqualPerimeter,
                     Family::kUnorientedConsecutive}) {
      const Instance inst = generate(f, n);
      const auto all = enumerate_all_optimal(inst);
      EnumerateConfig first;
      first.first_optimal = true;
      const auto one = enumerate_all_optimal(inst, first);
      CHECK(one.optimal_area == all.optimal_area);
      CHECK(one.optimal_boxes.size() == 1);
      const Solution best = anytime_search(inst, noop);
      CHECK(best.box.area() == all.optimal_area);
      for (const Solution& s : all.solutions) CHECK(oracle::grid_valid(inst, s));
    }
  }
}

TEST_CASE("optimum matches the cell tiler on random instances") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = oracle::random_instance(rng, 4, 5);
    const Length area = oracle::tiler_min_area(inst);
    const auto r = enumerate_all_optimal(inst);
    CHECK(r.optimal_area == static_cast<Area>(area));
    CHECK(normalized(r.optimal_boxes) == tiler_optimal_boxes(inst, area));
    for (const Solution& s : r.solutions) CHECK(oracle::grid_valid(inst, s));
  }
}
