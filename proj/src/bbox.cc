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

#include "rectpack/bbox.h"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "rectpack/containment.h"

namespace rectpack {

namespace {

struct Dims {
  Length w, h;
};

// Orientations of each rect no wider than `width`.
std::vector<Dims> allowed(const Rect& r, Length width) {
  std::vector<Dims> out;
  for (int k = 0; k < orientation_count(r); ++k) {
    const auto [w, h] = effective_dims(r, k == 1);
    if (w <= width) out.push_back({w, h});
  }
  return out;
}

Length min_h(const std::vector<Dims>& options) {
  Length h = options.front().h;
  for (const Dims& d : options) h = std::min(h, d.h);
  return h;
}

Length ceil_div(Area a, Length b) {
  return static_cast<Length>((a + static_cast<Area>(b) - 1) / static_cast<Area>(b));
}

}  // namespace

bool use_high_precision(const Instance& instance, PrecisionMode mode) {
  if (mode != PrecisionMode::kAuto) return mode == PrecisionMode::kHigh;
  if (instance.scale > 1) return true;
  for (const Rect& r : instance.rects) {
    if (r.width > kHighPrecisionDimension || r.height > kHighPrecisionDimension) return true;
  }
  return false;
}

Length widest_rect(const Instance& instance) {
  Length widest = 0;
  for (const Rect& r : instance.rects) {
    if (r.filler) continue;
    widest = std::max(widest, instance.oriented || !r.orientable ? r.width
                                                                 : std::min(r.width, r.height));
  }
  return widest;
}

Solution greedy_upper_bound(const Instance& instance) {
  if (instance.rects.empty()) throw std::invalid_argument("empty instance");
  std::vector<int> order;
  for (const Rect& r : instance.rects) {
    if (!r.filler) order.push_back(r.id);
  }
  const auto& rects = instance.rects;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const Area aa = rects[a].area();
    const Area ab = rects[b].area();
    return aa != ab ? aa > ab : rects[a].width > rects[b].width;
  });
  struct Shape {
    Length w, h;
    bool rotated;
  };
  auto shape_of = [](const Rect& r) {
    if (r.orientable && r.height > r.width) return Shape{r.height, r.width, true};
    return Shape{r.width, r.height, false};
  };
  Length height = 0;
  for (int id : order) height = std::max(height, shape_of(rects[id]).h);

  struct Cell {
    Length x0, x1, y0, y1;
  };
  std::vector<Cell> placed;
  Solution solution;
  for (int id : order) {
    const Shape s = shape_of(rects[id]);
    std::vector<Length> xs = {0};
    std::vector<Length> ys = {0};
    for (const Cell& c : placed) {
      xs.push_back(c.x1);
      ys.push_back(c.y1);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    bool done = false;
    for (Length x : xs) {
      for (Length y : ys) {
        if (y + s.h > height) break;
        const Cell c{x, x + s.w, y, y + s.h};
        const bool clear = std::none_of(placed.begin(), placed.end(), [&](const Cell& d) {
          return c.x0 < d.x1 && d.x0 < c.x1 && c.y0 < d.y1 && d.y0 < c.y1;
        });
        if (!clear) continue;
        placed.push_back(c);
        solution.placements.push_back({id, x, y, s.rotated});
        done = true;
        break;
      }
      if (done) break;
    }
  }
  Length width = 0;
  for (const Cell& c : placed) width = std::max(width, c.x1);
  solution.box = {width, height};
  std::sort(solution.placements.begin(), solution.placements.end(),
            [](const Placement& a, const Placement& b) { return a.rect_id < b.rect_id; });
  return solution;
}

std::optional<Length> min_height_for_width(const Instance& instance, Length width) {
  std::vector<std::vector<Dims>> options;
  for (const Rect& r : instance.rects) {
    if (r.filler) continue;
    auto o = allowed(r, width);
    if (o.empty()) return std::nullopt;
    options.push_back(std::move(o));
  }
  if (options.empty()) return 0;
  Length bound = 0;
  for (const auto& o : options) bound = std::max(bound, min_h(o));
  bound = std::max(bound, ceil_div(total_area(instance), width));

  // Two rects too wide to sit side by side stack.
  for (std::size_t i = 0; i < options.size(); ++i) {
    for (std::size_t j = i + 1; j < options.size(); ++j) {
      Length best = -1;
      for (const Dims& a : options[i]) {
        for (const Dims& b : options[j]) {
          const Length h = a.w + b.w > width ? a.h + b.h : std::max(a.h, b.h);
          best = best < 0 ? h : std::min(best, h);
        }
      }
      bound = std::max(bound, best);
    }
  }

  // Rects wider than half the box share no row with one another.
  Length stacked = 0;
  std::optional<Length> half_min;
  for (const auto& o : options) {
    const bool wide = std::all_of(o.begin(), o.end(), [&](const Dims& d) { return 2 * d.w > width; });
    if (wide) {
      stacked += min_h(o);
      continue;
    }
    const bool at_least_half =
        std::all_of(o.begin(), o.end(), [&](const Dims& d) { return 2 * d.w >= width; });
    if (at_least_half) half_min = std::min(half_min.value_or(min_h(o)), min_h(o));
  }
  if (half_min) stacked += *half_min;
  return std::max(bound, stacked);
}

bool mutex_compatible(Length width, Length height, const Instance& instance) {
  std::vector<const Rect*> rects;
  Length tallest = 0;
  for (const Rect& r : instance.rects) {
    if (r.filler) continue;
    rects.push_back(&r);
    tallest = std::max(tallest, instance.oriented || !r.orientable ? r.height
                                                                   : std::max(r.width, r.height));
  }
  if (height == tallest) return true;
  std::vector<std::vector<Length>> width_groups;
  std::vector<std::vector<Length>> height_groups;
  for (const Rect* r : rects) {
    if (instance.oriented || !r->orientable) {
      width_groups.push_back({r->width});
      height_groups.push_back({r->height});
    } else if (r->is_square()) {
      width_groups.push_back({r->width});
      height_groups.push_back({r->width});
    } else {
      width_groups.push_back({r->width, r->height});
      height_groups.push_back({r->width, r->height});
    }
  }
  auto generators = [](Length target, const std::vector<std::vector<Length>>& groups)
      -> std::optional<std::vector<std::size_t>> {
    try {
      auto choice = unique_generator_grouped(target, groups);
      if (!choice) return std::nullopt;
      std::vector<std::size_t> ids;
      for (const auto& [group, option] : *choice) ids.push_back(group);
      std::sort(ids.begin(), ids.end());
      return ids;
    } catch (const ContractViolation&) {
      return std::nullopt;
    }
  };
  const auto by_width = generators(width, width_groups);
  if (!by_width || by_width->size() < 2) return true;
  const auto by_height = generators(height, height_groups);
  return !(by_height && *by_height == *by_width);
}

SumSet learned_height_floor(const Instance& instance, std::span<const int> order,
                            int deepest_rect_index, Length cap) {
  if (deepest_rect_index < 0 || deepest_rect_index >= static_cast<int>(order.size())) {
    throw ContractViolation("deepest rect index outside the order");
  }
  SumSet set(cap);
  for (int p = 0; p <= deepest_rect_index; ++p) {
    const Rect& r = instance.rects[order[p]];
    if (instance.oriented || !r.orientable || r.is_square()) {
      set.add_dim(r.height);
    } else {
      const Length dims[2] = {r.width, r.height};
      set.add_alternatives(dims);
    }
  }
  return set;
}

void CandidateQueue::push(Length width, Length height) {
  if (!live_.insert(width).second) throw ContractViolation("width already has a live box");
  heap_.push({area_of(width, height), width, height});
}

Candidate CandidateQueue::pop() {
  Candidate c = heap_.top();
  heap_.pop();
  live_.erase(c.width);
  return c;
}

namespace {

class Enumerator {
 public:
  Enumerator(const Instance& instance, const EnumerateConfig& config, const Deadline& deadline)
      : instance_(instance),
        config_(config),
        deadline_(deadline),
        high_precision_(use_high_precision(instance, config.precision)),
        symmetric_(transpose_symmetric(instance)),
        greedy_(greedy_upper_bound(instance)),
        greedy_area_(greedy_.box.area()) {
    contain_.c_param = config.c_param;
    contain_.high_precision = high_precision_;
    contain_.max_solutions = std::max<std::size_t>(1, config.solutions_per_box);
    if (high_precision_) {
      const Length widest = std::max<Length>(1, widest_rect(instance));
      const auto y_cap = static_cast<Length>(greedy_area_ / static_cast<Area>(widest));
      x_sums_ = build_sums(instance, true, std::max(greedy_.box.width, greedy_.box.height));
      y_sums_ = build_sums(instance, false, y_cap);
    }
  }

  EnumerationResult run() {
    const auto started = std::chrono::steady_clock::now();
    EnumerationResult result;
    result.high_precision = high_precision_;
    const Length widest = widest_rect(instance_);
    const Length max_width =
        symmetric_ ? std::max(greedy_.box.width, greedy_.box.height) : greedy_.box.width;
    for (Length w = widest; w <= max_width; ++w) {
      if (high_precision_ && !x_sums_->contains(w)) continue;
      const auto h = min_height_for_width(instance_, w);
      if (!h) continue;
      if (auto first = admissible_height(w, *h)) queue_.push(w, *first);
    }
    std::optional<Area> best;
    while (!queue_.empty()) {
      const Candidate c = queue_.pop();
      if (best && c.area > *best) break;
      const Box box{c.width, c.height};
      ContainmentResult tested = test_box(instance_, box, contain_, deadline_);
      result.stats += tested.stats;
      if (config_.on_box) config_.on_box(box, tested.feasible());
      if (tested.feasible()) {
        best = c.area;
        result.optimal_boxes.push_back(box);
        for (Solution& s : tested.solutions) result.solutions.push_back(std::move(s));
        if (config_.first_optimal) break;
        continue;
      }
      if (auto next = next_height(box, tested.x_outcome)) queue_.push(c.width, *next);
    }
    if (!best) throw std::logic_error("no box up to the greedy area was feasible");
    result.optimal_area = *best;
    std::sort(result.optimal_boxes.begin(), result.optimal_boxes.end());
    std::stable_sort(result.solutions.begin(), result.solutions.end(),
                     [](const Solution& a, const Solution& b) { return a.box < b.box; });
    result.stats.cpu_time = std::chrono::steady_clock::now() - started;
    return result;
  }

 private:
  static SumSet build_sums(const Instance& instance, bool x_axis, Length cap) {
    SumSet set(cap);
    for (const Rect& r : instance.rects) {
      if (r.filler) continue;
      if (!instance.oriented && r.orientable && !r.is_square()) {
        const Length dims[2] = {r.width, r.height};
        set.add_alternatives(dims);
      } else {
        set.add_dim(x_axis ? r.width : r.height);
      }
    }
    return set;
  }

  // Smallest height >= h that a box of this width may take, or nullopt once
  // the area passes the greedy bound.
  std::optional<Length> admissible_height(Length width, Length h) const {
    if (symmetric_) h = std::max(h, width);
    while (true) {
      if (high_precision_) {
        auto s = y_sums_->next_at_or_above(h);
        if (!s) return std::nullopt;
        h = *s;
      }
      if (area_of(width, h) > greedy_area_) return std::nullopt;
      if (!high_precision_ || mutex_compatible(width, h, instance_)) return h;
      ++h;
    }
  }

  std::optional<Length> next_height(const Box& box, const XSearchOutcome& outcome) const {
    Length h = box.height + 1;
    const int n = static_cast<int>(instance_.rects.size());
    if (high_precision_ && !outcome.wasted_space_pruned && outcome.deepest_rect >= 0 &&
        outcome.deepest_rect + 1 < n) {
      const auto order = order_rectangles(instance_, box);
      const SumSet floor = learned_height_floor(instance_, order, outcome.deepest_rect,
                                                y_sums_->cap());
      auto above = floor.next_above(box.height);
      if (!above) return std::nullopt;
      h = std::max(h, *above);
    }
    return admissible_height(box.width, h);
  }

  const Instance& instance_;
  const EnumerateConfig& config_;
  const Deadline& deadline_;
  bool high_precision_;
  bool symmetric_;
  Solution greedy_;
  Area greedy_area_;
  ContainmentConfig contain_;
  std::optional<SumSet> x_sums_;
  std::optional<SumSet> y_sums_;
  CandidateQueue queue_;
};

}  // namespace

EnumerationResult enumerate_all_optimal(const Instance& instance, const EnumerateConfig& config,
                                        const Deadline& deadline) {
  instance.validate();
  return Enumerator(instance, config, deadline).run();
}

Solution anytime_search(const Instance& instance, const std::function<void(const Solution&)>& emit,
                        const AnytimeConfig& config, const Deadline& deadline) {
  instance.validate();
  Solution best = greedy_upper_bound(instance);
  emit(best);
  ContainmentConfig contain;
  contain.c_param = config.c_param;
  contain.high_precision = use_high_precision(instance, config.precision);
  const Length widest = widest_rect(instance);
  Length width = best.box.width - 1;
  Length height = best.box.height;
  try {
    while (width >= widest) {
      const auto floor = min_height_for_width(instance, width);
      if (!floor) break;
      height = std::max(height, *floor);
      if (area_of(width, height) >= best.box.area()) {
        --width;
        continue;
      }
      ContainmentResult tested = test_box(instance, {width, height}, contain, deadline);
      if (tested.feasible()) {
        best = tested.solutions.front();
        emit(best);
        --width;
      } else {
        ++height;
      }
    }
  } catch (const TimeLimitReached&) {
  }
  return best;
}

}  // namespace rectpack
