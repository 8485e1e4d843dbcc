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

#include "rectpack/perfect_packing.h"

#include <algorithm>
#include <stdexcept>

#include "rectpack/verify.h"

namespace rectpack {

Area PerfectInstance::item_area() const {
  Area sum = 0;
  for (const PerfectItem& item : items) sum = checked_add(sum, item.area());
  return sum;
}

int PerfectInstance::filler_count() const {
  int n = 0;
  for (const PerfectItem& item : items) {
    if (item.filler()) n += item.count;
  }
  return n;
}

namespace {

PerfectItem original_item(const XPlacement& p, Length x, Length width) {
  PerfectItem item;
  item.kind = ItemKind::kOriginal;
  item.rect_id = p.rect_id;
  item.width = width;
  item.height = p.height;
  item.x_min = item.x_max = x;
  item.original_x = p.x;
  item.original_width = p.width;
  item.rotated = p.rotated;
  return item;
}

Area placed_area(const XAssignment& assignment) {
  Area sum = 0;
  for (const XPlacement& p : assignment.items) sum = checked_add(sum, area_of(p.width, p.height));
  return sum;
}

bool x_overlap(Length a0, Length a1, Length b0, Length b1) { return a0 < b1 && b0 < a1; }

}  // namespace

PerfectInstance transform_units(const XAssignment& assignment, const Box& box) {
  PerfectInstance out;
  out.box = box;
  for (const XPlacement& p : assignment.items) out.items.push_back(original_item(p, p.x, p.width));
  const Area used = placed_area(assignment);
  if (used > box.area()) throw ContractViolation("x-assignment exceeds the box area");
  const Area empty = box.area() - used;
  if (empty > 0) {
    PerfectItem unit;
    unit.kind = ItemKind::kUnit;
    unit.x_min = 0;
    unit.x_max = box.width - 1;
    unit.count = static_cast<int>(empty);
    out.items.push_back(unit);
  }
  return out;
}

std::vector<WidenedRect> widen_rects(const XAssignment& assignment, const Box& box,
                                     std::span<const int> order) {
  std::vector<WidenedRect> rects;
  rects.reserve(assignment.items.size());
  for (const XPlacement& p : assignment.items) {
    rects.push_back({p.rect_id, p.x, p.width, p.height, p.x, p.width, p.rotated});
  }
  // Column c may join r when every other rect covering c already overlaps r
  // in x: those rects can never share r's rows.
  auto absorbable = [&rects](std::size_t r, Length c) {
    const WidenedRect& me = rects[r];
    for (std::size_t s = 0; s < rects.size(); ++s) {
      if (s == r) continue;
      const WidenedRect& other = rects[s];
      if (c < other.x || c >= other.x + other.width) continue;
      if (!x_overlap(me.x, me.x + me.width, other.x, other.x + other.width)) return false;
    }
    return true;
  };
  for (int id : order) {
    const auto r = static_cast<std::size_t>(id);
    while (rects[r].x + rects[r].width < box.width && absorbable(r, rects[r].x + rects[r].width)) {
      ++rects[r].width;
    }
    while (rects[r].x > 0 && absorbable(r, rects[r].x - 1)) {
      --rects[r].x;
      ++rects[r].width;
    }
  }
  return rects;
}

std::vector<PerfectItem> consolidate_strips(const Box& box, std::span<const WidenedRect> widened) {
  std::vector<Length> cuts = {0, box.width};
  for (const WidenedRect& r : widened) {
    cuts.push_back(r.x);
    cuts.push_back(r.x + r.width);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<PerfectItem> strips;
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const Length x0 = cuts[s];
    const Length x1 = cuts[s + 1];
    Length used = 0;
    for (const WidenedRect& r : widened) {
      if (r.x <= x0 && x0 < r.x + r.width) used += r.height;
    }
    const Length residual = box.height - used;
    if (residual < 0) throw ContractViolation("column segment is over-committed");
    if (residual == 0) continue;
    PerfectItem strip;
    strip.kind = ItemKind::kStrip;
    strip.width = x1 - x0;
    strip.height = 1;
    strip.x_min = strip.x_max = x0;
    strip.count = static_cast<int>(residual);
    strips.push_back(strip);
  }
  return strips;
}

PerfectInstance transform_strips(const XAssignment& assignment, const Box& box,
                                 std::span<const int> order) {
  PerfectInstance out;
  out.box = box;
  const auto widened = widen_rects(assignment, box, order);
  for (int id : order) {
    const WidenedRect& w = widened[id];
    out.items.push_back(original_item(assignment.items[id], w.x, w.width));
  }
  for (PerfectItem& strip : consolidate_strips(box, widened)) out.items.push_back(strip);
  return out;
}

PerfectInstance make_perfect(const XAssignment& assignment, const Box& box,
                             std::span<const int> order) {
  const Area used = placed_area(assignment);
  if (box.area() - used <= kUnitFillerLimit) {
    PerfectInstance out = transform_units(assignment, box);
    // Keep originals in the solver's order so the y-stage tries them first.
    std::vector<PerfectItem> ordered;
    for (int id : order) ordered.push_back(out.items[id]);
    for (std::size_t i = assignment.items.size(); i < out.items.size(); ++i) {
      ordered.push_back(out.items[i]);
    }
    out.items = std::move(ordered);
    return out;
  }
  return transform_strips(assignment, box, order);
}

Solution restore(const Instance& instance, const PerfectInstance& perfect,
                 std::span<const ItemPlacement> placements) {
  Solution solution;
  solution.box = perfect.box;
  for (const ItemPlacement& p : placements) {
    const PerfectItem& item = perfect.items[p.item];
    if (item.filler()) continue;
    solution.placements.push_back({item.rect_id, item.original_x, p.y, item.rotated});
  }
  std::sort(solution.placements.begin(), solution.placements.end(),
            [](const Placement& a, const Placement& b) { return a.rect_id < b.rect_id; });
  const VerifyReport report = verify(instance, solution);
  if (!report.valid) throw std::logic_error("restored packing failed verification");
  return solution;
}

}  // namespace rectpack
