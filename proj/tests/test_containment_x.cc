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

#include <map>
#include <random>
#include <set>
#include <tuple>

#include "oracles.h"
#include "rectpack/benchmarks.h"
#include "rectpack/containment.h"
#include "rectpack/containment_x.h"
#include "rectpack/verify.h"

using namespace rectpack;

namespace {

using XKey = std::vector<std::tuple<Length, Length, Length>>;  // (x, w, h) by rect id

XKey key_of(const XAssignment& a) {
  XKey k;
  for (const XPlacement& p : a.items) k.emplace_back(p.x, p.width, p.height);
  return k;
}

std::set<XKey> solver_leaves(const Instance& inst, const Box& box, XSearchConfig config,
                             std::size_t* emitted = nullptr) {
  std::set<XKey> out;
  std::size_t count = 0;
  SearchStats stats;
  XSolver solver(inst, box, config);
  solver.solve(
      [&](const XAssignment& a) {
        out.insert(key_of(a));
        ++count;
        return true;
      },
      stats);
  if (emitted != nullptr) *emitted = count;
  return out;
}

// Every orientation and x for every rect, keeping assignments whose column
// heights never exceed the box height.
void brute_x(const Instance& inst, const Box& box, std::size_t i, XKey& cur,
             std::set<XKey>& out) {
  if (i == inst.rects.size()) {
    std::vector<Length> col(static_cast<std::size_t>(box.width), 0);
    for (const auto& [x, w, h] : cur) {
      for (Length c = x; c < x + w; ++c) col[c] += h;
    }
    for (Length c : col) {
      if (c > box.height) return;
    }
    out.insert(cur);
    return;
  }
  const Rect& r = inst.rects[i];
  std::set<std::pair<Length, Length>> shapes{{r.width, r.height}};
  if (r.orientable) shapes.insert({r.height, r.width});
  for (auto [w, h] : shapes) {
    if (w > box.width || h > box.height) continue;
    for (Length x = 0; x + w <= box.width; ++x) {
      cur.emplace_back(x, w, h);
      brute_x(inst, box, i + 1, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

TEST_CASE("profile after a fixed 3x2 at x=2 in a 6x3 box") {
  FreeHeightProfile profile(6, 3);
  XVar var;
  auto token = commit_interval(var, {3, 2, false}, {2, 2}, profile);
  REQUIRE(token);
  CHECK(var.state == XVar::State::kFixed);
  std::vector<Length> free(profile.free_heights().begin(), profile.free_heights().end());
  CHECK(free == std::vector<Length>{3, 3, 1, 1, 1, 3});
  CHECK(profile.histogram() == std::vector<Area>{0, 3, 0, 9});
  const std::vector<PendingDemand> pending{{3, 6}, {2, 4}};
  CHECK_FALSE(check_wasted_space(profile, pending));
  CHECK(check_wasted_space(profile, std::vector<PendingDemand>{}));
}

TEST_CASE("compulsory part of an interval") {
  FreeHeightProfile profile(6, 3);
  XVar var;
  auto token = commit_interval(var, {4, 2, false}, {0, 2}, profile);
  REQUIRE(token);
  std::vector<Length> free(profile.free_heights().begin(), profile.free_heights().end());
  CHECK(free == std::vector<Length>{3, 3, 1, 1, 3, 3});

  FreeHeightProfile wide(6, 3);
  XVar loose;
  REQUIRE(commit_interval(loose, {2, 2, false}, {0, 3}, wide));
  CHECK(wide == FreeHeightProfile(6, 3));
}

TEST_CASE("wasted space boundary") {
  FreeHeightProfile profile(4, 1);
  CHECK(check_wasted_space(profile, std::vector<PendingDemand>{{1, 4}}));
  CHECK_FALSE(check_wasted_space(profile, std::vector<PendingDemand>{{1, 5}}));
  CHECK_FALSE(check_wasted_space(profile, std::vector<PendingDemand>{{2, 1}}));
}

TEST_CASE("cumulative violation leaves the profile untouched") {
  FreeHeightProfile profile(4, 2);
  XVar a, b;
  REQUIRE(commit_interval(a, {4, 2, false}, {0, 0}, profile));
  const FreeHeightProfile before = profile;
  CHECK_FALSE(commit_interval(b, {1, 1, false}, {1, 1}, profile));
  CHECK(profile == before);
  CHECK(b.state == XVar::State::kUnassigned);
}

TEST_CASE("commit and undo restore the profile exactly") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Length W = std::uniform_int_distribution<Length>(3, 12)(rng);
    const Length H = std::uniform_int_distribution<Length>(2, 8)(rng);
    FreeHeightProfile profile(W, H);
    std::vector<XVar> vars(6);
    std::vector<std::pair<int, CommitToken>> stack;
    std::vector<FreeHeightProfile> snapshots;
    Area last_free = profile.total_free();
    for (int step = 0; step < 12; ++step) {
      const int v = std::uniform_int_distribution<int>(0, 5)(rng);
      XVar& var = vars[v];
      std::optional<CommitToken> token;
      const FreeHeightProfile before = profile;
      if (var.state == XVar::State::kUnassigned) {
        const Length w = std::uniform_int_distribution<Length>(1, W)(rng);
        const Length h = std::uniform_int_distribution<Length>(1, H)(rng);
        const Length lo = std::uniform_int_distribution<Length>(0, W - w)(rng);
        const Length hi = std::uniform_int_distribution<Length>(lo, W - w)(rng);
        token = commit_interval(var, {w, h, false}, {lo, hi}, profile);
      } else if (var.state == XVar::State::kInterval) {
        token = commit_fixed(var, std::uniform_int_distribution<Length>(var.lo, var.hi)(rng),
                             profile);
      }
      if (!token) {
        CHECK(profile == before);
        continue;
      }
      CHECK(profile.total_free() <= last_free);
      last_free = profile.total_free();
      snapshots.push_back(before);
      stack.emplace_back(v, *token);
    }
    while (!stack.empty()) {
      undo(vars[stack.back().first], stack.back().second, profile);
      CHECK(profile == snapshots.back());
      stack.pop_back();
      snapshots.pop_back();
    }
    CHECK(profile == FreeHeightProfile(W, H));
  }
}

TEST_CASE("supply query matches a direct count") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Length W = 9, H = 7;
    FreeHeightProfile profile(W, H);
    for (int k = 0; k < 4; ++k) {
      const Length x0 = std::uniform_int_distribution<Length>(0, W - 1)(rng);
      const Length x1 = std::uniform_int_distribution<Length>(x0 + 1, W)(rng);
      profile.reserve(x0, x1, std::uniform_int_distribution<Length>(1, 3)(rng));
    }
    for (Length h = 1; h <= H; ++h) {
      Area expected = 0;
      for (Length c = 0; c < W; ++c) {
        if (profile.free_at(c) >= h) expected += static_cast<Area>(profile.free_at(c));
      }
      CHECK(profile.supply_at_or_above(h) == expected);
    }
  }
}

TEST_CASE("rect order") {
  const Instance ep = generate(Family::kOrientedEqualPerimeter, 4);
  CHECK(order_rectangles(ep, {10, 10}) == std::vector<int>{3, 2, 1, 0});
  const Instance dp = generate(Family::kUnorientedDoublePerimeter, 3);
  CHECK(order_rectangles(dp, {10, 10}) == std::vector<int>{2, 1, 0});
  const Instance one = generate(Family::kConsecutiveSquares, 1);
  CHECK(order_rectangles(one, {1, 1}) == std::vector<int>{0});
}

TEST_CASE("default interval factor") {
  CHECK(default_c_param(generate(Family::kConsecutiveSquares, 5)) == doctest::Approx(0.35));
  CHECK(default_c_param(generate(Family::kOrientedEqualPerimeter, 5)) == doctest::Approx(0.2));
}

TEST_CASE("dominance on the 4-3-2-1 squares") {
  const Instance sq = generate(Family::kConsecutiveSquares, 4);
  const DominanceTable table = build_dominance(sq, {10, 10});
  const int big = 3;  // the 4x4
  CHECK(table.dominated(big, 0, 1));
  CHECK(table.dominated(big, 0, 2));
  CHECK_FALSE(table.dominated(big, 0, 3));
  CHECK_FALSE(table.dominated(big, 0, 0));

  const Instance alone = generate(Family::kConsecutiveSquares, 1);
  CHECK(build_dominance(alone, {5, 1}).dominated_prefix(0, 0) == 4);
}

TEST_CASE("small packing oracle") {
  const std::vector<std::vector<Orientation>> two{{{2, 2, false}}, {{1, 1, false}}};
  CHECK(small_packing_exists(two, 2, 3) == true);
  CHECK(small_packing_exists(two, 2, 2) == false);
  const std::vector<std::vector<Orientation>> three{{{3, 3, false}}, {{2, 2, false}}};
  CHECK(small_packing_exists(three, 3, 4) == false);
}

TEST_CASE("interval plans") {
  CHECK(plan_intervals(20, 43, 0.55, 0) ==
        std::vector<XInterval>{{0, 7}, {8, 15}, {16, 23}});
  CHECK(plan_intervals(5, 5, 0.55, 0) == std::vector<XInterval>{{0, 0}});
  CHECK(plan_intervals(4, 6, 0.35, 0) == std::vector<XInterval>{{0, 1}, {2, 2}});
  // Dominated offsets 1..2 are skipped behind the degenerate interval.
  CHECK(plan_intervals(4, 10, 0.35, 2) == std::vector<XInterval>{{0, 0}, {3, 4}, {5, 6}});
  CHECK(plan_intervals(4, 3, 0.35, 0).empty());
  CHECK_THROWS_AS(plan_intervals(4, 6, 0.0, 0), std::invalid_argument);
}

TEST_CASE("plans partition the legal x range") {
  for (Length w = 1; w <= 12; ++w) {
    for (Length W = w; W <= 30; ++W) {
      for (double c : {0.2, 0.35, 0.55, 1.0}) {
        for (Length g : {Length{0}, Length{1}, Length{3}}) {
          std::vector<Length> covered;
          for (const XInterval& iv : plan_intervals(w, W, c, g)) {
            for (Length x = iv.lo; x <= iv.hi; ++x) covered.push_back(x);
          }
          std::vector<Length> expected;
          for (Length x = 0; x <= W - w; ++x) {
            if (x == 0 || x > g) expected.push_back(x);
          }
          CHECK(covered == expected);
        }
      }
    }
  }
}

TEST_CASE("solver basics") {
  const Instance one = generate(Family::kConsecutiveSquares, 1);
  std::size_t n = 0;
  const auto leaves = solver_leaves(one, {1, 1}, {}, &n);
  CHECK(n == 1);
  CHECK(leaves == std::set<XKey>{{{0, 1, 1}}});

  const Instance sq2 = generate(Family::kConsecutiveSquares, 2);
  CHECK_FALSE(solver_leaves(sq2, {3, 2}, {.c_param = 0.35}).empty());
  CHECK(test_box(sq2, {3, 2}, {}).feasible());

  CHECK(solver_leaves(sq2, {2, 2}, {}).empty());
}

TEST_CASE("x-stage leaves equal brute-force x-assignments without dominance") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = oracle::random_instance(rng, 4, 5);
    const Box box{std::uniform_int_distribution<Length>(2, 7)(rng),
                  std::uniform_int_distribution<Length>(2, 7)(rng)};
    if (box.area() < total_area(inst)) continue;
    std::set<XKey> expected;
    XKey cur;
    brute_x(inst, box, 0, cur, expected);
    for (double c : {0.01, 0.35, 0.55, 1.0}) {
      std::size_t emitted = 0;
      const auto got = solver_leaves(inst, box, {.c_param = c, .use_dominance = false}, &emitted);
      CHECK(got == expected);
      CHECK(emitted == got.size());
    }
  }
}

TEST_CASE("emitted x-assignments respect the cumulative constraint") {
  const Instance inst = generate(Family::kOrientedEqualPerimeter, 5);
  const Box box{6, 7};
  const auto leaves = solver_leaves(inst, box, {});
  CHECK_FALSE(leaves.empty());
  for (const XKey& k : leaves) {
    std::vector<Length> col(6, 0);
    for (const auto& [x, w, h] : k) {
      for (Length c = x; c < x + w; ++c) col[c] += h;
    }
    for (Length c : col) CHECK(c <= box.height);
  }
}

TEST_CASE("dominance and wasted-space pruning keep feasibility") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 80; ++trial) {
    const Instance inst = oracle::random_instance(rng, 5, 4);
    const Box box{std::uniform_int_distribution<Length>(2, 7)(rng),
                  std::uniform_int_distribution<Length>(2, 7)(rng)};
    const bool truth = oracle::tiler_fits(inst, box.width, box.height);
    ContainmentConfig plain;
    plain.use_dominance = false;
    plain.use_wasted_space = false;
    CHECK(test_box(inst, box, plain).feasible() == truth);
    CHECK(test_box(inst, box, {}).feasible() == truth);
  }
}
