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

#include "rectpack/verify.h"

#include <algorithm>
#include <stdexcept>

namespace rectpack {

std::string_view violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kOverlap:
      return "overlap";
    case ViolationKind::kOutOfBounds:
      return "out_of_bounds";
    case ViolationKind::kBadRotation:
      return "bad_rotation";
    case ViolationKind::kWrongCount:
      return "wrong_count";
  }
  return "unknown";
}

double empty_percent(const Instance& instance, const Box& box) {
  const double used = static_cast<double>(total_area(instance));
  const double total = static_cast<double>(box.area());
  return total == 0.0 ? 0.0 : 100.0 * (1.0 - used / total);
}

VerifyReport verify(const Instance& instance, const Solution& solution) {
  VerifyReport report;
  const Box& box = solution.box;
  std::vector<int> real_ids;
  for (const Rect& r : instance.rects) {
    if (!r.filler) real_ids.push_back(r.id);
  }

  struct Span {
    int id;
    Length x0, x1, y0, y1;
  };
  std::vector<Span> spans;
  std::vector<int> seen(instance.rects.size(), 0);
  bool count_ok = solution.placements.size() == real_ids.size();
  for (const Placement& p : solution.placements) {
    if (p.rect_id < 0 || p.rect_id >= static_cast<int>(instance.rects.size()) ||
        instance.rects[p.rect_id].filler) {
      count_ok = false;
      continue;
    }
    if (++seen[p.rect_id] > 1) count_ok = false;
    const Rect& r = instance.rects[p.rect_id];
    if (p.rotated && !r.orientable) {
      report.violations.push_back({ViolationKind::kBadRotation, {r.id}});
      continue;
    }
    const Length w = p.rotated ? r.height : r.width;
    const Length h = p.rotated ? r.width : r.height;
    if (p.x < 0 || p.y < 0 || p.x + w > box.width || p.y + h > box.height) {
      report.violations.push_back({ViolationKind::kOutOfBounds, {r.id}});
    }
    spans.push_back({r.id, p.x, p.x + w, p.y, p.y + h});
  }
  if (!count_ok) {
    std::vector<int> missing;
    for (int id : real_ids) {
      if (seen[id] != 1) missing.push_back(id);
    }
    report.violations.push_back({ViolationKind::kWrongCount, missing});
  }
  // Open interiors: shared edges are legal.
  for (std::size_t i = 0; i < spans.size(); ++i) {
    for (std::size_t j = i + 1; j < spans.size(); ++j) {
      const Span& a = spans[i];
      const Span& b = spans[j];
      if (a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1) {
        report.violations.push_back({ViolationKind::kOverlap, {a.id, b.id}});
      }
    }
  }
  report.valid = report.violations.empty();
  const Area used = total_area(instance);
  const Area cells = box.width > 0 && box.height > 0 ? box.area() : 0;
  report.empty_cells = cells >= used ? cells - used : 0;
  report.empty_pct = empty_percent(instance, box);
  return report;
}

namespace {

struct Shape {
  Length w, h;
};

struct Piece {
  std::vector<Shape> shapes;
  // Index of the previous piece with identical shapes, or -1.
  int twin_of = -1;
};

struct Cell {
  Length x0, x1, y0, y1;
};

class BruteForce {
 public:
  BruteForce(std::vector<Piece> pieces, Box box) : pieces_(std::move(pieces)), box_(box) {
    placed_.resize(pieces_.size());
    position_.resize(pieces_.size(), -1);
  }

  bool run() { return place(0); }

 private:
  bool place(std::size_t i) {
    if (i == pieces_.size()) return true;
    const Piece& piece = pieces_[i];
    for (const Shape& s : piece.shapes) {
      if (s.w > box_.width || s.h > box_.height) continue;
      Length x_max = box_.width - s.w;
      Length y_max = box_.height - s.h;
      // Mirroring in either axis maps packings onto packings, so the first
      // piece may stay in the lower-left quadrant of its range.
      if (i == 0) {
        x_max /= 2;
        y_max /= 2;
      }
      for (Length x = 0; x <= x_max; ++x) {
        for (Length y = 0; y <= y_max; ++y) {
          const Length pos = x * (box_.height + 1) + y;
          if (piece.twin_of >= 0 && pos <= position_[piece.twin_of]) continue;
          const Cell c{x, x + s.w, y, y + s.h};
          bool clear = true;
          for (std::size_t j = 0; j < i; ++j) {
            const Cell& d = placed_[j];
            if (c.x0 < d.x1 && d.x0 < c.x1 && c.y0 < d.y1 && d.y0 < c.y1) {
              clear = false;
              break;
            }
          }
          if (!clear) continue;
          placed_[i] = c;
          position_[i] = pos;
          if (place(i + 1)) return true;
        }
      }
    }
    return false;
  }

  std::vector<Piece> pieces_;
  Box box_;
  std::vector<Cell> placed_;
  std::vector<Length> position_;
};

std::vector<Piece> make_pieces(const Instance& instance) {
  std::vector<const Rect*> rects;
  for (const Rect& r : instance.rects) {
    if (!r.filler) rects.push_back(&r);
  }
  std::stable_sort(rects.begin(), rects.end(),
                   [](const Rect* a, const Rect* b) { return a->area() > b->area(); });
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const Rect& r = *rects[i];
    Piece piece;
    piece.shapes.push_back({r.width, r.height});
    if (r.orientable && r.width != r.height) piece.shapes.push_back({r.height, r.width});
    for (std::size_t j = i; j-- > 0;) {
      const Rect& q = *rects[j];
      if (q.width == r.width && q.height == r.height && q.orientable == r.orientable) {
        piece.twin_of = static_cast<int>(j);
        break;
      }
    }
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

}  // namespace

bool brute_force_fits(const Instance& instance, const Box& box) {
  if (box.width <= 0 || box.height <= 0) return false;
  if (box.area() < total_area(instance)) return false;
  auto pieces = make_pieces(instance);
  // Piece 0 is already pinned to a quadrant; ordering its twins as well
  // could exclude every mirror image of a packing.
  for (auto& p : pieces) {
    if (p.twin_of == 0) p.twin_of = -1;
  }
  return BruteForce(std::move(pieces), box).run();
}

BruteForceResult brute_force_optimal(const Instance& instance, Length dim_cap) {
  if (dim_cap > kBruteForceMaxDim) throw std::invalid_argument("dimension cap above 8");
  std::size_t count = 0;
  Length row_width = 0;
  Length tallest = 0;
  for (const Rect& r : instance.rects) {
    if (r.filler) continue;
    ++count;
    if (r.width > dim_cap || r.height > dim_cap) {
      throw std::invalid_argument("rect exceeds the brute-force dimension cap");
    }
    row_width += r.width;
    tallest = std::max(tallest, r.height);
  }
  if (count == 0 || count > kBruteForceMaxRects) {
    throw std::invalid_argument("brute force handles 1 to 5 rects");
  }
  const bool symmetric = transpose_symmetric(instance);
  const Area lower = total_area(instance);
  // Side by side in a row always fits.
  const Area upper = area_of(row_width, tallest);
  for (Area a = lower; a <= upper; ++a) {
    BruteForceResult result;
    for (Length w = 1; static_cast<Area>(w) <= a; ++w) {
      if (a % static_cast<Area>(w) != 0) continue;
      const auto h = static_cast<Length>(a / static_cast<Area>(w));
      if (symmetric && w > h) continue;
      if (brute_force_fits(instance, {w, h})) result.boxes.push_back({w, h});
    }
    if (!result.boxes.empty()) {
      result.area = a;
      return result;
    }
  }
  throw std::logic_error("brute force found no packing below the row bound");
}

}  // namespace rectpack
