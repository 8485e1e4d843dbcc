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

// Turns a complete x-assignment into a perfect-packing instance: the items
// fill the box exactly, so the y-stage may assume no cell stays empty.

#ifndef RECTPACK_PERFECT_PACKING_H_
#define RECTPACK_PERFECT_PACKING_H_

#include <span>
#include <vector>

#include "rectpack/containment_x.h"
#include "rectpack/model.h"

namespace rectpack {

enum class ItemKind { kOriginal, kStrip, kUnit };

struct PerfectItem {
  ItemKind kind = ItemKind::kOriginal;
  // Original rect id, -1 for fillers.
  int rect_id = -1;
  // Packed size; originals may be wider than the rect they stand for.
  Length width = 1;
  Length height = 1;
  // Range of legal x for the lower-left corner.
  Length x_min = 0;
  Length x_max = 0;
  // Identical copies represented by this entry.
  int count = 1;
  // Restoration data for originals.
  Length original_x = 0;
  Length original_width = 0;
  bool rotated = false;

  bool filler() const { return kind != ItemKind::kOriginal; }
  Area area() const { return checked_mul(area_of(width, height), static_cast<Area>(count)); }
};

struct PerfectInstance {
  Box box;
  std::vector<PerfectItem> items;

  Area item_area() const;
  int filler_count() const;
};

// Originals at their fixed x plus box area - total area unit fillers.
PerfectInstance transform_units(const XAssignment& assignment, const Box& box);

struct WidenedRect {
  int rect_id = 0;
  Length x = 0;
  Length width = 0;
  Length height = 0;
  Length original_x = 0;
  Length original_width = 0;
  bool rotated = false;
};

// Grows each rect, in `order`, first rightward then leftward over columns in
// which every other rect's footprint already overlaps it in x, since no other
// rect can share its rows there.
std::vector<WidenedRect> widen_rects(const XAssignment& assignment, const Box& box,
                                     std::span<const int> order);

// One strip item per elementary column segment (segments cut at every
// footprint edge), holding the segment's residual height as 1-tall strips.
std::vector<PerfectItem> consolidate_strips(const Box& box, std::span<const WidenedRect> widened);

// widen_rects followed by consolidate_strips.
PerfectInstance transform_strips(const XAssignment& assignment, const Box& box,
                                 std::span<const int> order);

// Unit fillers for small residuals, widening and strips above this many empty cells.
inline constexpr Area kUnitFillerLimit = 4096;

PerfectInstance make_perfect(const XAssignment& assignment, const Box& box,
                             std::span<const int> order);

struct ItemPlacement {
  int item = 0;
  Length x = 0;
  Length y = 0;
};

// Drops fillers and restores original widths. Throws std::logic_error if the
// result does not verify against `instance`.
Solution restore(const Instance& instance, const PerfectInstance& perfect,
                 std::span<const ItemPlacement> placements);

}  // namespace rectpack

#endif  // RECTPACK_PERFECT_PACKING_H_
