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

// The x-stage of the containment problem: rects first receive x-intervals,
// whose compulsory parts are charged to a cumulative free-height profile, and
// then single x-coordinates. Every complete assignment that survives the
// cumulative constraint and the wasted-space bound is handed to a visitor.

#ifndef RECTPACK_CONTAINMENT_X_H_
#define RECTPACK_CONTAINMENT_X_H_

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rectpack/model.h"
#include "rectpack/subset_sums.h"

namespace rectpack {

struct Orientation {
  Length width = 0;
  Length height = 0;
  bool rotated = false;
};

// Orientations of `rect` that fit inside `box`, original orientation first.
std::vector<Orientation> orientations_in(const Rect& rect, const Box& box);

// Per-column free height of a box, with a Fenwick tree over free heights so
// that the wasted-space supply sum_{i >= h} v_i is a logarithmic query.
class FreeHeightProfile {
 public:
  FreeHeightProfile(Length width, Length height);

  Length width() const { return static_cast<Length>(free_.size()); }
  Length height() const { return height_; }
  Length free_at(Length column) const { return free_[column]; }
  std::span<const Length> free_heights() const { return free_; }

  // v[i] = i * (number of columns with free height i) for i in 0..H.
  std::vector<Area> histogram() const;
  // Empty cells in columns whose free height is at least h.
  Area supply_at_or_above(Length h) const;
  Area total_free() const { return supply_at_or_above(1); }

  // Lowers columns [x0, x1) by h. Leaves the profile untouched and returns
  // false if any column would go negative.
  bool reserve(Length x0, Length x1, Length h);
  void release(Length x0, Length x1, Length h);

  friend bool operator==(const FreeHeightProfile& a, const FreeHeightProfile& b) {
    return a.free_ == b.free_ && a.height_ == b.height_;
  }

 private:
  void fenwick_add(Length free_height, std::int64_t delta);

  Length height_;
  std::vector<Length> free_;
  std::vector<std::int64_t> tree_;  // indexed by free height + 1
};

struct XInterval {
  Length lo = 0;
  Length hi = 0;
  friend bool operator==(const XInterval&, const XInterval&) = default;
};

// Decision state of one rect during the x-stage.
struct XVar {
  enum class State { kUnassigned, kInterval, kFixed };

  int rect_id = 0;
  State state = State::kUnassigned;
  Orientation orientation;
  Length lo = 0;
  Length hi = 0;
  Length x = 0;

  // Columns charged regardless of the final x: [hi, lo + width) when non-empty.
  Length compulsory_begin() const { return hi; }
  Length compulsory_end() const { return lo + orientation.width; }
  Length compulsory_width() const {
    return state == State::kUnassigned ? 0 : std::max<Length>(0, compulsory_end() - compulsory_begin());
  }
};

struct ColumnCharge {
  Length begin = 0;
  Length end = 0;
  Length height = 0;
};

// Reverses exactly one commit.
struct CommitToken {
  XVar previous;
  std::array<ColumnCharge, 2> charges{};
  int charge_count = 0;
};

// Assigns an interval (and orientation) to an unassigned var. A single-value
// interval fixes x outright. Returns nullopt, with nothing changed, on a
// cumulative violation.
std::optional<CommitToken> commit_interval(XVar& var, const Orientation& orientation,
                                           XInterval interval, FreeHeightProfile& profile);
// Fixes x inside the var's interval, charging the columns outside its
// compulsory part.
std::optional<CommitToken> commit_fixed(XVar& var, Length x, FreeHeightProfile& profile);
void undo(XVar& var, const CommitToken& token, FreeHeightProfile& profile);

struct PendingDemand {
  Length height = 0;
  Area area = 0;
};

// The wasted-space bound: for every h, the area of pending rects of height at
// least h fits in the cells of columns with at least h free.
bool check_wasted_space(const FreeHeightProfile& profile, std::span<const PendingDemand> pending);

// Dominated left-wall offsets per rect and orientation. Offset g is dominated
// when every other rect that can enter a g-wide gap beside the rect fits in it
// entirely, and all such rects pack into the gap together.
class DominanceTable {
 public:
  DominanceTable() = default;
  explicit DominanceTable(std::size_t rect_count) : prefix_(rect_count, {0, 0}) {}

  // Offsets 1..G are dominated; 0 when none are.
  Length dominated_prefix(int rect_id, int orientation_index) const {
    return prefix_.empty() ? 0 : prefix_[rect_id][orientation_index];
  }
  bool dominated(int rect_id, int orientation_index, Length offset) const {
    return offset >= 1 && offset <= dominated_prefix(rect_id, orientation_index);
  }
  void set_prefix(int rect_id, int orientation_index, Length g) {
    prefix_[rect_id][orientation_index] = g;
  }

 private:
  std::vector<std::array<Length, 2>> prefix_;
};

DominanceTable build_dominance(const Instance& instance, const Box& box);

// Whether `dims` (each with its allowed orientations) pack into a w x h box.
// Exhaustive over normal positions; used for dominance gaps and small tests.
// With a nonzero node budget, nullopt means the budget ran out undecided.
std::optional<bool> small_packing_exists(std::span<const std::vector<Orientation>> dims, Length w,
                                         Length h, std::uint64_t node_budget = 0);

// Fixed branching order over rect ids: decreasing width for oriented rects,
// ascending (w + h) / (w * h) for unoriented ones, ties by id.
std::vector<int> order_rectangles(const Instance& instance, const Box& box);

// Default interval-size factor for an instance.
double default_c_param(const Instance& instance);

// Balanced x-intervals for a rect of `width` in a box of `box_width`. When
// dominated offsets exist the degenerate interval [0, 0] comes first and the
// dominated offsets are skipped. With `domain` set, only its values are legal
// x-coordinates and intervals are balanced by value count.
std::vector<XInterval> plan_intervals(Length width, Length box_width, double c_param,
                                      Length dominated_prefix,
                                      const SumSet* domain = nullptr);

struct XPlacement {
  int rect_id = 0;
  Length x = 0;
  Length width = 0;
  Length height = 0;
  bool rotated = false;
};

// One complete x-assignment, indexed by rect id.
struct XAssignment {
  std::vector<XPlacement> items;
};

struct XSearchConfig {
  double c_param = 0.2;
  bool high_precision = false;
  bool use_dominance = true;
  bool use_wasted_space = true;
};

struct XSearchOutcome {
  // Position in the fixed order of the deepest rect that received an
  // interval; -1 when none did.
  int deepest_rect = -1;
  bool wasted_space_pruned = false;
  bool stopped = false;
};

// Returns false to stop the enumeration.
using XVisitor = std::function<bool(const XAssignment&)>;

class XSolver {
 public:
  XSolver(const Instance& instance, const Box& box, XSearchConfig config);

  const std::vector<int>& order() const { return order_; }
  const DominanceTable& dominance() const { return dominance_; }

  XSearchOutcome solve(const XVisitor& visit, SearchStats& stats,
                       const Deadline& deadline = Deadline());

 private:
  bool search();
  bool branch_interval(int pos);
  bool branch_fixed(int pos);
  bool emit();
  bool wasted_space_ok();
  PendingDemand demand_of(int pos) const;
  void move_demand(const PendingDemand& from, const PendingDemand& to);
  void reset_demand();
  SumSet fixed_domain(int pos) const;
  Area interval_reduction(int pos) const;

  const Instance& instance_;
  Box box_;
  XSearchConfig config_;
  std::vector<int> order_;
  DominanceTable dominance_;
  std::optional<SumSet> static_x_sums_;
  // Indexed by position in order_.
  std::vector<std::vector<Orientation>> orientations_;
  std::vector<std::vector<std::vector<XInterval>>> plans_;
  std::vector<XVar> vars_;
  FreeHeightProfile profile_;
  int next_unassigned_ = 0;
  // Pending wasted-space demand by height; index H + 1 holds rects that cannot fit.
  std::vector<Area> demand_;
  std::vector<Length> demand_heights_;

  const XVisitor* visit_ = nullptr;
  SearchStats* stats_ = nullptr;
  const Deadline* deadline_ = nullptr;
  XSearchOutcome outcome_;
};

}  // namespace rectpack

#endif  // RECTPACK_CONTAINMENT_X_H_
