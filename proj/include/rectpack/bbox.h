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

// Minimum-area bounding boxes: candidate boxes are tested in order of
// increasing area until every box of the smallest feasible area is known.

#ifndef RECTPACK_BBOX_H_
#define RECTPACK_BBOX_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <vector>

#include "rectpack/model.h"
#include "rectpack/subset_sums.h"

namespace rectpack {

enum class PrecisionMode { kAuto, kLow, kHigh };

// High precision for scaled instances and for any dimension above this.
inline constexpr Length kHighPrecisionDimension = 256;

bool use_high_precision(const Instance& instance, PrecisionMode mode);

// Bottom-left-first packing into a strip as tall as the tallest rect.
Solution greedy_upper_bound(const Instance& instance);

// Narrowest width any box can have.
Length widest_rect(const Instance& instance);

// Lower bound on the height of any packing of `width`; nullopt when some
// rect fits at this width in no orientation.
std::optional<Length> min_height_for_width(const Instance& instance, Length width);

// False when width and height are each generated by exactly one subset and
// those subsets name the same two or more rects.
bool mutex_compatible(Length width, Length height, const Instance& instance);

// Subset sums of the candidate heights of the first d + 1 rects in `order`.
SumSet learned_height_floor(const Instance& instance, std::span<const int> order,
                            int deepest_rect_index, Length cap);

struct Candidate {
  Area area = 0;
  Length width = 0;
  Length height = 0;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Min-heap by area, then width; holds at most one box per width.
class CandidateQueue {
 public:
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  // Throws ContractViolation if the width already has a live box.
  void push(Length width, Length height);
  const Candidate& top() const { return heap_.top(); }
  Candidate pop();

 private:
  struct Later {
    bool operator()(const Candidate& a, const Candidate& b) const {
      return a.area != b.area ? a.area > b.area : a.width > b.width;
    }
  };
  std::priority_queue<Candidate, std::vector<Candidate>, Later> heap_;
  std::set<Length> live_;
};

struct EnumerateConfig {
  PrecisionMode precision = PrecisionMode::kAuto;
  // Interval-size factor; 0 picks the instance default.
  double c_param = 0.0;
  // Stop at the first feasible box.
  bool first_optimal = false;
  std::size_t solutions_per_box = 1;
  // Called after every tested box.
  std::function<void(const Box&, bool feasible)> on_box;
};

struct EnumerationResult {
  Area optimal_area = 0;
  // Ascending width.
  std::vector<Box> optimal_boxes;
  std::vector<Solution> solutions;
  SearchStats stats;
  bool high_precision = false;
};

EnumerationResult enumerate_all_optimal(const Instance& instance,
                                        const EnumerateConfig& config = {},
                                        const Deadline& deadline = Deadline());

struct AnytimeConfig {
  PrecisionMode precision = PrecisionMode::kAuto;
  double c_param = 0.0;
};

// Walks boxes from the greedy solution towards narrower ones, reporting each
// strictly smaller packing. Returns the last one reported. A deadline ends
// the walk early without error.
Solution anytime_search(const Instance& instance, const std::function<void(const Solution&)>& emit,
                        const AnytimeConfig& config = {}, const Deadline& deadline = Deadline());

}  // namespace rectpack

#endif  // RECTPACK_BBOX_H_
