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

// The y-stage: with every x fixed and the box filled exactly, items are
// placed bottom-up at the lowest empty cell of the leftmost column segment
// that still has one.

#ifndef RECTPACK_CONTAINMENT_Y_H_
#define RECTPACK_CONTAINMENT_Y_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rectpack/model.h"
#include "rectpack/perfect_packing.h"
#include "rectpack/subset_sums.h"

namespace rectpack {

// Occupancy of a box whose columns are grouped into segments [cut_i, cut_i+1);
// cells of one segment share a row bit, stored column-major.
class OccupancyGrid {
 public:
  OccupancyGrid(std::vector<Length> cuts, Length height);

  std::size_t segment_count() const { return cuts_.size() - 1; }
  Length segment_start(std::size_t s) const { return cuts_[s]; }
  Length segment_width(std::size_t s) const { return cuts_[s + 1] - cuts_[s]; }
  // Segment starting exactly at x, if any.
  std::optional<std::size_t> segment_at(Length x) const;
  Length height() const { return height_; }

  bool filled(std::size_t s, Length y) const;
  bool full(std::size_t s) const { return filled_[s] == height_; }
  bool range_empty(std::size_t s, Length y0, Length y1) const;
  void fill(std::size_t s, Length y0, Length y1);
  void clear(std::size_t s, Length y0, Length y1);

  // Lowest empty row of segment s, or nullopt if full.
  std::optional<Length> lowest_empty(std::size_t s) const;
  // Empty rows from y upward before the first filled one.
  Length empty_run(std::size_t s, Length y) const;

 private:
  std::uint64_t* column(std::size_t s) { return bits_.data() + s * words_; }
  const std::uint64_t* column(std::size_t s) const { return bits_.data() + s * words_; }

  std::vector<Length> cuts_;
  Length height_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::vector<Length> filled_;
};

struct Corner {
  std::size_t segment = 0;
  Length x = 0;
  Length y = 0;
};

// Lowest empty cell of the leftmost segment that has one.
std::optional<Corner> next_corner(const OccupancyGrid& grid);

struct YSearchConfig {
  // When set, originals may only sit at y-coordinates in this set.
  const SumSet* y_sums = nullptr;
};

// Returns false to stop the enumeration.
using SolutionVisitor = std::function<bool(const Solution&)>;

// Enumerates y-coordinates completing `perfect` and passes each restored
// solution to `visit`. Returns false when the visitor stopped the search.
bool solve_y(const Instance& instance, const PerfectInstance& perfect, const YSearchConfig& config,
             const SolutionVisitor& visit, SearchStats& stats,
             const Deadline& deadline = Deadline());

}  // namespace rectpack

#endif  // RECTPACK_CONTAINMENT_Y_H_
