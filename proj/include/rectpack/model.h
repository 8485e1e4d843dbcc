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

#ifndef RECTPACK_MODEL_H_
#define RECTPACK_MODEL_H_

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rectpack {

// All geometry is integral, in scaled units. Coordinates are signed so that
// differences can be taken freely; areas are unsigned and checked.
using Length = std::int64_t;
using Area = std::uint64_t;

// Raised when a 64-bit area accumulator would overflow.
class PrecisionError : public std::overflow_error {
 public:
  explicit PrecisionError(const std::string& what)
      : std::overflow_error("precision exceeded: " + what) {}
};

// Raised when a caller breaks an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Area checked_mul(Area a, Area b);
Area checked_add(Area a, Area b);
inline Area area_of(Length w, Length h) {
  return checked_mul(static_cast<Area>(w), static_cast<Area>(h));
}

struct Rect {
  int id = 0;
  Length width = 1;
  Length height = 1;
  bool orientable = false;
  // Created by the perfect-packing transform; never part of subset sums.
  bool filler = false;

  Area area() const { return area_of(width, height); }
  bool is_square() const { return width == height; }
  friend bool operator==(const Rect&, const Rect&) = default;
};

struct Instance {
  std::vector<Rect> rects;
  // Global policy: rotation forbidden for every rect.
  bool oriented = true;
  // Multiplier used to integerize a rational instance; 1 for native integers.
  Length scale = 1;
  std::string label;
  // Benchmark family tag (kebab-case) and size, empty/0 for custom input.
  std::string family;
  int n = 0;

  std::size_t size() const { return rects.size(); }
  // Throws std::invalid_argument when ids or dimensions are malformed.
  void validate() const;
};

struct Box {
  Length width = 0;
  Length height = 0;

  Area area() const { return area_of(width, height); }
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

struct Placement {
  int rect_id = 0;
  Length x = 0;
  Length y = 0;
  bool rotated = false;
  friend bool operator==(const Placement&, const Placement&) = default;
};

struct SearchStats {
  std::uint64_t boxes_tested = 0;
  std::uint64_t x_solutions = 0;
  std::uint64_t nodes_x = 0;
  std::uint64_t nodes_y = 0;
  std::chrono::nanoseconds cpu_time{0};

  SearchStats& operator+=(const SearchStats& other);
  double milliseconds() const {
    return std::chrono::duration<double, std::milli>(cpu_time).count();
  }
};

struct Solution {
  Box box;
  std::vector<Placement> placements;
  SearchStats stats;
};

// Sum of w*h over non-filler rects. Throws PrecisionError on overflow.
Area total_area(const Instance& instance);

// (width, height) of `rect` as placed; swapped iff rotated.
std::pair<Length, Length> effective_dims(const Rect& rect, bool rotated);

// Distinct orientations a rect may take: one for squares and fixed rects,
// two (original first) for orientable non-squares.
int orientation_count(const Rect& rect);

// True when every rect is a square.
bool all_squares(const Instance& instance);

// True when the multiset of (w, h) pairs is closed under transposition, so a
// packing in W x H maps onto one in H x W. Squares match themselves.
bool dimension_symmetric(const Instance& instance);

// Whether a W x H solution always transposes into an H x W one, which lets the
// box search insist on height >= width.
bool transpose_symmetric(const Instance& instance);

std::string format_box(const Box& box);

class TimeLimitReached : public std::runtime_error {
 public:
  TimeLimitReached() : std::runtime_error("time limit reached") {}
};

// Wall-clock budget checked at deterministic node-count intervals.
class Deadline {
 public:
  static constexpr std::uint64_t kCheckInterval = std::uint64_t{1} << 16;

  Deadline() = default;
  explicit Deadline(std::chrono::steady_clock::duration budget)
      : limit_(std::chrono::steady_clock::now() + budget), active_(true) {}

  bool active() const { return active_; }
  bool expired() const {
    return active_ && std::chrono::steady_clock::now() >= limit_;
  }
  // Called once per search node; throws TimeLimitReached when the budget is
  // spent, probing the clock only every kCheckInterval calls.
  void tick(std::uint64_t node_count) const {
    if (active_ && node_count % kCheckInterval == 0 && expired()) {
      throw TimeLimitReached();
    }
  }

 private:
  std::chrono::steady_clock::time_point limit_{};
  bool active_ = false;
};

}  // namespace rectpack

#endif  // RECTPACK_MODEL_H_
