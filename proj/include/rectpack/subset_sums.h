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

#ifndef RECTPACK_SUBSET_SUMS_H_
#define RECTPACK_SUBSET_SUMS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rectpack/model.h"

namespace rectpack {

// Set of achievable subset sums in [0, cap], stored as a bitset of cap + 1
// bits. Always contains 0.
class SumSet {
 public:
  explicit SumSet(Length cap = 0);

  Length cap() const { return cap_; }
  bool contains(Length v) const;
  std::size_t size() const;

  // Inserts v if it lies within [0, cap].
  void insert(Length v);
  // set |= set + d, truncated at cap.
  void add_dim(Length d);
  // set |= (set + d1) | (set + d2) | ... using the set as it was on entry.
  void add_alternatives(std::span<const Length> dims);

  std::optional<Length> next_at_or_above(Length v) const;
  std::optional<Length> next_above(Length v) const { return next_at_or_above(v + 1); }
  std::optional<Length> prev_at_or_below(Length v) const;

  // Sorted ascending.
  std::vector<Length> values() const;

  friend bool operator==(const SumSet&, const SumSet&) = default;

 private:
  Length cap_;
  std::vector<std::uint64_t> bits_;
};

// Every subset sum of `dims` that does not exceed `cap`.
SumSet precompute(std::span<const Length> dims, Length cap);

// Candidate x and y coordinates for `box`. Oriented instances keep widths and
// heights apart; unoriented ones use every width and height for both axes.
std::pair<SumSet, SumSet> separate_axis_sets(const Instance& instance, const Box& box);

struct FixedSpan {
  Length x;
  Length width;
};

// Candidate x-coordinates at a search node: 0, the right edge of each fixed
// rect, then closure under adding each unfixed rect's candidate widths.
SumSet dynamic_x_sums(std::span<const FixedSpan> fixed,
                      std::span<const std::vector<Length>> unfixed_dims, Length cap);

// Index subset of `dims` that sums to `target`, if exactly one exists. Throws
// ContractViolation when no subset reaches the target.
std::optional<std::vector<std::size_t>> unique_generator(Length target,
                                                         std::span<const Length> dims);

// Grouped form: each group contributes at most one of its options. Returns
// (group, option) pairs of the single generating choice, if unique.
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> unique_generator_grouped(
    Length target, std::span<const std::vector<Length>> groups);

inline std::optional<Length> next_sum_at_or_above(const SumSet& set, Length v) {
  return set.next_at_or_above(v);
}

}  // namespace rectpack

#endif  // RECTPACK_SUBSET_SUMS_H_
