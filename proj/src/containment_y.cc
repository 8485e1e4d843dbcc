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

#include "rectpack/containment_y.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <tuple>

namespace rectpack {

namespace {

constexpr std::uint64_t kAll = ~std::uint64_t{0};

// Mask of bits [lo, hi) within one word, 0 <= lo < hi <= 64.
std::uint64_t word_mask(unsigned lo, unsigned hi) {
  const std::uint64_t upper = hi == 64 ? kAll : (std::uint64_t{1} << hi) - 1;
  return upper & ~((std::uint64_t{1} << lo) - 1);
}

template <typename Fn>
void for_each_word(Length y0, Length y1, Fn&& fn) {
  auto y = static_cast<std::uint64_t>(y0);
  const auto end = static_cast<std::uint64_t>(y1);
  while (y < end) {
    const std::uint64_t w = y / 64;
    const auto lo = static_cast<unsigned>(y % 64);
    const auto hi = static_cast<unsigned>(std::min<std::uint64_t>(64, end - w * 64));
    if (!fn(w, word_mask(lo, hi))) return;
    y = (w + 1) * 64;
  }
}

}  // namespace

OccupancyGrid::OccupancyGrid(std::vector<Length> cuts, Length height)
    : cuts_(std::move(cuts)), height_(height), words_((static_cast<std::size_t>(height) + 63) / 64) {
  if (cuts_.size() < 2 || !std::is_sorted(cuts_.begin(), cuts_.end())) {
    throw std::invalid_argument("segment cuts must be sorted with at least two entries");
  }
  bits_.assign(segment_count() * words_, 0);
  filled_.assign(segment_count(), 0);
}

std::optional<std::size_t> OccupancyGrid::segment_at(Length x) const {
  auto it = std::lower_bound(cuts_.begin(), cuts_.end() - 1, x);
  if (it == cuts_.end() - 1 || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - cuts_.begin());
}

bool OccupancyGrid::filled(std::size_t s, Length y) const {
  return (column(s)[y / 64] >> (y % 64)) & 1U;
}

bool OccupancyGrid::range_empty(std::size_t s, Length y0, Length y1) const {
  if (y0 < 0 || y1 > height_) return false;
  const std::uint64_t* col = column(s);
  bool empty = true;
  for_each_word(y0, y1, [&](std::uint64_t w, std::uint64_t mask) {
    empty = (col[w] & mask) == 0;
    return empty;
  });
  return empty;
}

void OccupancyGrid::fill(std::size_t s, Length y0, Length y1) {
  std::uint64_t* col = column(s);
  for_each_word(y0, y1, [&](std::uint64_t w, std::uint64_t mask) {
    col[w] |= mask;
    return true;
  });
  filled_[s] += y1 - y0;
}

void OccupancyGrid::clear(std::size_t s, Length y0, Length y1) {
  std::uint64_t* col = column(s);
  for_each_word(y0, y1, [&](std::uint64_t w, std::uint64_t mask) {
    col[w] &= ~mask;
    return true;
  });
  filled_[s] -= y1 - y0;
}

std::optional<Length> OccupancyGrid::lowest_empty(std::size_t s) const {
  if (full(s)) return std::nullopt;
  const std::uint64_t* col = column(s);
  for (std::size_t w = 0; w < words_; ++w) {
    if (col[w] != kAll) {
      const auto y = static_cast<Length>(w * 64 + std::countr_one(col[w]));
      return y < height_ ? std::optional<Length>(y) : std::nullopt;
    }
  }
  return std::nullopt;
}

Length OccupancyGrid::empty_run(std::size_t s, Length y) const {
  const std::uint64_t* col = column(s);
  Length end = height_;
  for_each_word(y, height_, [&](std::uint64_t w, std::uint64_t mask) {
    const std::uint64_t hits = col[w] & mask;
    if (hits == 0) return true;
    end = static_cast<Length>(w * 64 + std::countr_zero(hits));
    return false;
  });
  return end - y;
}

std::optional<Corner> next_corner(const OccupancyGrid& grid) {
  for (std::size_t s = 0; s < grid.segment_count(); ++s) {
    if (auto y = grid.lowest_empty(s)) return Corner{s, grid.segment_start(s), *y};
  }
  return std::nullopt;
}

namespace {

class YSolver {
 public:
  YSolver(const Instance& instance, const PerfectInstance& perfect, const YSearchConfig& config,
          const SolutionVisitor& visit, SearchStats& stats, const Deadline& deadline)
      : instance_(instance),
        perfect_(perfect),
        config_(config),
        visit_(visit),
        stats_(stats),
        deadline_(deadline),
        grid_(make_cuts(perfect), perfect.box.height) {
    const std::size_t segs = grid_.segment_count();
    starts_.resize(segs);
    strip_.assign(segs, -1);
    unit_budget_.assign(segs, 0);
    remaining_.resize(perfect.items.size());
    item_segments_.resize(perfect.items.size());
    for (std::size_t i = 0; i < perfect.items.size(); ++i) {
      const PerfectItem& item = perfect.items[i];
      remaining_[i] = item.count;
      if (item.kind == ItemKind::kUnit) {
        unit_item_ = static_cast<int>(i);
        continue;
      }
      const auto first = grid_.segment_at(item.x_min);
      const auto last = item.x_min + item.width == perfect.box.width
                            ? std::optional<std::size_t>(segs)
                            : grid_.segment_at(item.x_min + item.width);
      if (!first || !last) throw ContractViolation("item edge off the segment grid");
      item_segments_[i] = {*first, *last};
      if (item.kind == ItemKind::kStrip) {
        strip_[*first] = static_cast<int>(i);
      } else {
        starts_[*first].push_back(static_cast<int>(i));
      }
    }
    if (unit_item_ >= 0) {
      // Each unit column takes exactly the cells its originals leave free.
      for (std::size_t s = 0; s < segs; ++s) unit_budget_[s] = perfect.box.height;
      for (std::size_t i = 0; i < perfect.items.size(); ++i) {
        if (perfect.items[i].kind != ItemKind::kOriginal) continue;
        for (std::size_t s = item_segments_[i].first; s < item_segments_[i].second; ++s) {
          unit_budget_[s] -= perfect.items[i].height * perfect.items[i].count;
        }
      }
      if (grid_.segment_count() != static_cast<std::size_t>(perfect.box.width)) {
        throw ContractViolation("unit fillers need unit-width segments");
      }
    }
  }

  bool run() { return search(0); }

 private:
  static std::vector<Length> make_cuts(const PerfectInstance& perfect) {
    std::vector<Length> cuts = {0, perfect.box.width};
    bool units = false;
    for (const PerfectItem& item : perfect.items) {
      if (item.kind == ItemKind::kUnit) {
        units = true;
        continue;
      }
      cuts.push_back(item.x_min);
      cuts.push_back(item.x_min + item.width);
    }
    if (units) {
      cuts.clear();
      for (Length x = 0; x <= perfect.box.width; ++x) cuts.push_back(x);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
  }

  // The empty run above the corner can only be filled by a stack of items
  // starting in this segment.
  bool gap_fillable(std::size_t s, Length gap) const {
    Length fillers = unit_budget_[s];
    if (strip_[s] >= 0) fillers += remaining_[strip_[s]];
    if (fillers >= gap) return true;
    SumSet sums(gap);
    for (int i : starts_[s]) {
      for (int k = 0; k < remaining_[i]; ++k) sums.add_dim(perfect_.items[i].height);
    }
    auto t = sums.next_at_or_above(gap - fillers);
    return t.has_value();
  }

  void place(int item, std::size_t s, Length y, Length h) {
    const auto [first, last] = span_of(item, s);
    for (std::size_t k = first; k < last; ++k) grid_.fill(k, y, y + h);
    --remaining_[item];
    stack_.push_back({item, grid_.segment_start(s), y});
  }

  void unplace(int item, std::size_t s, Length y, Length h) {
    const auto [first, last] = span_of(item, s);
    for (std::size_t k = first; k < last; ++k) grid_.clear(k, y, y + h);
    ++remaining_[item];
    stack_.pop_back();
  }

  std::pair<std::size_t, std::size_t> span_of(int item, std::size_t s) const {
    if (item == unit_item_) return {s, s + 1};
    return item_segments_[item];
  }

  bool fits(int item, Length y) const {
    const PerfectItem& it = perfect_.items[item];
    const auto [first, last] = item_segments_[item];
    for (std::size_t k = first; k < last; ++k) {
      if (!grid_.range_empty(k, y, y + it.height)) return false;
    }
    return true;
  }

  bool search(std::size_t first_open) {
    ++stats_.nodes_y;
    deadline_.tick(stats_.nodes_y);
    std::size_t s = first_open;
    while (s < grid_.segment_count() && grid_.full(s)) ++s;
    if (s == grid_.segment_count()) return leaf();
    const Length y = *grid_.lowest_empty(s);
    const Length gap = grid_.empty_run(s, y);
    if (!gap_fillable(s, gap)) return true;

    const bool y_legal = config_.y_sums == nullptr || config_.y_sums->contains(y);
    // Items identical down to their original footprint are interchangeable.
    std::vector<std::tuple<Length, Length, Length, Length>> tried;
    if (y_legal) {
      for (int i : starts_[s]) {
        if (remaining_[i] == 0) continue;
        const PerfectItem& item = perfect_.items[i];
        if (item.height > gap) continue;
        const std::tuple key{item.width, item.height, item.original_x, item.original_width};
        if (std::find(tried.begin(), tried.end(), key) != tried.end()) continue;
        tried.push_back(key);
        if (!fits(i, y)) continue;
        place(i, s, y, item.height);
        const bool keep_going = search(s);
        unplace(i, s, y, item.height);
        if (!keep_going) return false;
      }
    }
    if (strip_[s] >= 0 && remaining_[strip_[s]] > 0) {
      place(strip_[s], s, y, 1);
      const bool keep_going = search(s);
      unplace(strip_[s], s, y, 1);
      if (!keep_going) return false;
    }
    if (unit_item_ >= 0 && unit_budget_[s] > 0) {
      --unit_budget_[s];
      place(unit_item_, s, y, 1);
      const bool keep_going = search(s);
      unplace(unit_item_, s, y, 1);
      ++unit_budget_[s];
      if (!keep_going) return false;
    }
    return true;
  }

  bool leaf() {
    for (std::size_t i = 0; i < remaining_.size(); ++i) {
      if (remaining_[i] != 0) throw std::logic_error("box full with items left over");
    }
    Solution solution = restore(instance_, perfect_, stack_);
    return visit_(solution);
  }

  const Instance& instance_;
  const PerfectInstance& perfect_;
  const YSearchConfig& config_;
  const SolutionVisitor& visit_;
  SearchStats& stats_;
  const Deadline& deadline_;
  OccupancyGrid grid_;
  // Original items by starting segment, in solver order.
  std::vector<std::vector<int>> starts_;
  std::vector<int> strip_;
  std::vector<Length> unit_budget_;
  int unit_item_ = -1;
  std::vector<int> remaining_;
  std::vector<std::pair<std::size_t, std::size_t>> item_segments_;
  std::vector<ItemPlacement> stack_;
};

}  // namespace

bool solve_y(const Instance& instance, const PerfectInstance& perfect, const YSearchConfig& config,
             const SolutionVisitor& visit, SearchStats& stats, const Deadline& deadline) {
  if (perfect.item_area() != perfect.box.area()) {
    throw ContractViolation("perfect-packing items do not fill the box");
  }
  return YSolver(instance, perfect, config, visit, stats, deadline).run();
}

}  // namespace rectpack
