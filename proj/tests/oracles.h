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

// Reference implementations used only by tests. Each one is deliberately
// naive and shares no code with the library.

#ifndef RECTPACK_TESTS_ORACLES_H_
#define RECTPACK_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "rectpack/model.h"

namespace rectpack::oracle {

// Every subset sum of `dims` up to `cap`, by walking all 2^k masks.
inline std::set<Length> subset_sums(const std::vector<Length>& dims, Length cap) {
  std::set<Length> out;
  const std::uint32_t masks = 1u << dims.size();
  for (std::uint32_t m = 0; m < masks; ++m) {
    Length s = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (m & (1u << i)) s += dims[i];
    }
    if (s <= cap) out.insert(s);
  }
  return out;
}

// Number of subsets of `dims` summing to `target`.
inline int subset_count(const std::vector<Length>& dims, Length target) {
  int count = 0;
  const std::uint32_t masks = 1u << dims.size();
  for (std::uint32_t m = 0; m < masks; ++m) {
    Length s = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (m & (1u << i)) s += dims[i];
    }
    count += s == target;
  }
  return count;
}

// Paints every placement into a cell grid. True when every rect is inside the
// box, no cell is painted twice, and rotations respect the rect.
inline bool grid_valid(const Instance& instance, const Solution& s) {
  std::size_t originals = 0;
  for (const Rect& r : instance.rects) originals += r.filler ? 0 : 1;
  if (s.placements.size() != originals) return false;
  std::vector<int> grid(static_cast<std::size_t>(s.box.width * s.box.height), 0);
  std::set<int> seen;
  for (const Placement& p : s.placements) {
    if (p.rect_id < 0 || p.rect_id >= static_cast<int>(instance.rects.size())) return false;
    if (!seen.insert(p.rect_id).second) return false;
    const Rect& r = instance.rects[p.rect_id];
    if (p.rotated && !r.orientable) return false;
    const Length w = p.rotated ? r.height : r.width;
    const Length h = p.rotated ? r.width : r.height;
    if (p.x < 0 || p.y < 0 || p.x + w > s.box.width || p.y + h > s.box.height) return false;
    for (Length x = p.x; x < p.x + w; ++x) {
      for (Length y = p.y; y < p.y + h; ++y) {
        if (++grid[y * s.box.width + x] > 1) return false;
      }
    }
  }
  return true;
}

// Cell-by-cell tiler: the first empty cell in column-major order either takes
// the bottom-left corner of some unplaced rect or is declared waste, up to the
// box's spare area. Complete for integer packings.
class CellTiler {
 public:
  CellTiler(const Instance& instance, Length w, Length h) : w_(w), h_(h) {
    for (const Rect& r : instance.rects) {
      std::vector<std::pair<Length, Length>> o{{r.width, r.height}};
      if (r.orientable && r.width != r.height) o.emplace_back(r.height, r.width);
      options_.push_back(o);
      area_ += r.width * r.height;
    }
    grid_.assign(static_cast<std::size_t>(w * h), false);
    used_.assign(options_.size(), false);
  }

  bool fits() {
    if (area_ > w_ * h_) return false;
    waste_left_ = w_ * h_ - area_;
    return search(0);
  }

 private:
  bool search(Length from) {
    Length cell = from;
    while (cell < w_ * h_ && grid_[cell]) ++cell;
    if (cell == w_ * h_) return true;
    const Length x = cell / h_;
    const Length y = cell % h_;
    for (std::size_t i = 0; i < options_.size(); ++i) {
      if (used_[i]) continue;
      for (auto [rw, rh] : options_[i]) {
        if (!free(x, y, rw, rh)) continue;
        paint(x, y, rw, rh, true);
        used_[i] = true;
        const bool ok = search(cell + 1);
        used_[i] = false;
        paint(x, y, rw, rh, false);
        if (ok) return true;
      }
    }
    if (waste_left_ > 0) {
      --waste_left_;
      grid_[cell] = true;
      const bool ok = search(cell + 1);
      grid_[cell] = false;
      ++waste_left_;
      if (ok) return true;
    }
    return false;
  }

  bool free(Length x, Length y, Length rw, Length rh) const {
    if (x + rw > w_ || y + rh > h_) return false;
    for (Length i = x; i < x + rw; ++i) {
      for (Length j = y; j < y + rh; ++j) {
        if (grid_[i * h_ + j]) return false;
      }
    }
    return true;
  }

  void paint(Length x, Length y, Length rw, Length rh, bool v) {
    for (Length i = x; i < x + rw; ++i) {
      for (Length j = y; j < y + rh; ++j) grid_[i * h_ + j] = v;
    }
  }

  Length w_, h_;
  Length area_ = 0;
  Length waste_left_ = 0;
  std::vector<std::vector<std::pair<Length, Length>>> options_;
  std::vector<bool> grid_;
  std::vector<bool> used_;
};

inline bool tiler_fits(const Instance& instance, Length w, Length h) {
  return CellTiler(instance, w, h).fits();
}

// Minimum box area by increasing area over every box shape.
inline Length tiler_min_area(const Instance& instance) {
  Length area = 0;
  Length span_w = 0;
  Length span_h = 0;
  for (const Rect& r : instance.rects) {
    area += r.width * r.height;
    span_w += r.orientable ? std::max(r.width, r.height) : r.width;
    span_h += r.orientable ? std::max(r.width, r.height) : r.height;
  }
  for (Length a = area;; ++a) {
    for (Length w = 1; w <= std::min(a, span_w); ++w) {
      if (a % w != 0 || a / w > span_h) continue;
      if (tiler_fits(instance, w, a / w)) return a;
    }
  }
}

// Small random instance: up to max_rects rects with dims in [1, max_dim].
inline Instance random_instance(std::mt19937_64& rng, int max_rects, Length max_dim) {
  std::uniform_int_distribution<int> count(1, max_rects);
  std::uniform_int_distribution<Length> dim(1, max_dim);
  std::bernoulli_distribution coin(0.5);
  Instance instance;
  instance.oriented = coin(rng);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Rect r;
    r.id = i;
    r.width = dim(rng);
    r.height = dim(rng);
    r.orientable = !instance.oriented;
    instance.rects.push_back(r);
  }
  return instance;
}

}  // namespace rectpack::oracle

#endif  // RECTPACK_TESTS_ORACLES_H_
