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
#include "rectpack/subset_sums.h"
#include "rectpack/verify.h"

using namespace rectpack;

namespace {

std::set<Length> as_set(const SumSet& s) {
  const auto v = s.values();
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("precompute examples") {
  CHECK(precompute(std::vector<Length>{1, 2}, 10).values() == std::vector<Length>{0, 1, 2, 3});
  CHECK(precompute(std::vector<Length>{}, 9).values() == std::vector<Length>{0});
  const std::vector<Length> dims{2, 2, 3};
  CHECK(as_set(precompute(dims, 5)) == oracle::subset_sums(dims, 5));
  CHECK(precompute(dims, 5).values() == std::vector<Length>{0, 2, 3, 4, 5});
}

TEST_CASE("precompute agrees with exhaustive enumeration") {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int> count(0, 12);
  std::uniform_int_distribution<Length> dim(1, 40);
  std::uniform_int_distribution<Length> cap(0, 300);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Length> dims(static_cast<std::size_t>(count(rng)));
    for (Length& d : dims) d = dim(rng);
    const Length c = cap(rng);
    const SumSet s = precompute(dims, c);
    CHECK(as_set(s) == oracle::subset_sums(dims, c));
    CHECK(s.contains(0));
    const auto v = s.values();
    CHECK(std::is_sorted(v.begin(), v.end()));
    CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
    CHECK((v.empty() || v.back() <= c));
  }
}

TEST_CASE("large caps cross word boundaries") {
  const std::vector<Length> dims{63, 64, 65, 129};
  CHECK(as_set(precompute(dims, 1000)) == oracle::subset_sums(dims, 1000));
}

TEST_CASE("separate_axis_sets") {
  Instance oriented;
  oriented.rects = {{0, 3, 2, false, false}, {1, 4, 1, false, false}};
  auto [xs, ys] = separate_axis_sets(oriented, {10, 10});
  CHECK(xs.values() == std::vector<Length>{0, 3, 4, 7});
  CHECK(ys.values() == std::vector<Length>{0, 1, 2, 3});

  Instance unoriented;
  unoriented.oriented = false;
  unoriented.rects = {{0, 3, 2, true, false}};
  auto [ux, uy] = separate_axis_sets(unoriented, {10, 10});
  CHECK(ux.values() == std::vector<Length>{0, 2, 3, 5});
  CHECK(uy.values() == std::vector<Length>{0, 2, 3, 5});

  Instance unit;
  unit.rects = {{0, 1, 1, false, false}};
  auto [one_x, one_y] = separate_axis_sets(unit, {1, 1});
  CHECK(one_x.values() == std::vector<Length>{0, 1});
  CHECK(one_y.values() == std::vector<Length>{0, 1});
}

TEST_CASE("dynamic_x_sums") {
  const std::vector<FixedSpan> fixed{{2, 3}};
  CHECK(dynamic_x_sums(fixed, {}, 10).values() == std::vector<Length>{0, 5});

  const std::vector<std::vector<Length>> unfixed{{2}, {3}};
  CHECK(dynamic_x_sums({}, unfixed, 10).values() == std::vector<Length>{0, 2, 3, 5});

  const std::vector<FixedSpan> wall{{0, 4}};
  const std::vector<std::vector<Length>> two{{2}};
  // Oracle: sums of {4 (fixed right edge), 2} that stay within 5.
  std::set<Length> expected;
  for (Length s : oracle::subset_sums({4, 2}, 5)) expected.insert(s);
  CHECK(as_set(dynamic_x_sums(wall, two, 5)) == expected);
}

TEST_CASE("dynamic_x_sums covers every left-justified x") {
  // Every x of a left-justified packing is 0 or the right edge of some rect,
  // so it is a subset sum of widths.
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = oracle::random_instance(rng, 4, 4);
    inst.oriented = true;
    for (Rect& r : inst.rects) r.orientable = false;
    std::vector<std::vector<Length>> unfixed;
    for (const Rect& r : inst.rects) unfixed.push_back({r.width});
    Length w = 0;
    for (const Rect& r : inst.rects) w += r.width;
    const SumSet sums = dynamic_x_sums({}, unfixed, w);
    std::vector<Length> widths;
    for (const Rect& r : inst.rects) widths.push_back(r.width);
    for (Length x : oracle::subset_sums(widths, w)) CHECK(sums.contains(x));
  }
}

TEST_CASE("unique_generator") {
  const auto g = unique_generator(7, std::vector<Length>{3, 4, 10});
  REQUIRE(g);
  CHECK(*g == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(unique_generator(4, std::vector<Length>{4, 2, 2}));
  const auto zero = unique_generator(0, std::vector<Length>{5, 6});
  REQUIRE(zero);
  CHECK(zero->empty());
  CHECK_THROWS_AS(unique_generator(1, std::vector<Length>{5}), ContractViolation);
}

TEST_CASE("unique_generator agrees with subset counting") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> count(1, 8);
  std::uniform_int_distribution<Length> dim(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Length> dims(static_cast<std::size_t>(count(rng)));
    for (Length& d : dims) d = dim(rng);
    for (Length t : oracle::subset_sums(dims, 40)) {
      const auto g = unique_generator(t, dims);
      CHECK(g.has_value() == (oracle::subset_count(dims, t) == 1));
      if (g) {
        Length s = 0;
        for (std::size_t i : *g) s += dims[i];
        CHECK(s == t);
      }
    }
  }
}

TEST_CASE("next_sum_at_or_above") {
  SumSet s(5);
  for (Length v : {2, 3, 5}) s.insert(v);
  CHECK(next_sum_at_or_above(s, 4) == 5);
  CHECK(next_sum_at_or_above(s, 0) == 0);
  CHECK_FALSE(next_sum_at_or_above(s, 6));
  CHECK(s.prev_at_or_below(4) == 3);
}
