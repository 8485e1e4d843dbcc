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

#include "rectpack/containment_x.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

namespace rectpack {

std::vector<Orientation> orientations_in(const Rect& rect, const Box& box) {
  std::vector<Orientation> out;
  const int count = orientation_count(rect);
  for (int k = 0; k < count; ++k) {
    const bool rotated = k == 1;
    const auto [w, h] = effective_dims(rect, rotated);
    if (w <= box.width && h <= box.height) out.push_back({w, h, rotated});
  }
  return out;
}

// ---------------------------------------------------------------------------
// FreeHeightProfile

FreeHeightProfile::FreeHeightProfile(Length width, Length height)
    : height_(height),
      free_(static_cast<std::size_t>(width), height),
      tree_(static_cast<std::size_t>(height) + 2, 0) {
  if (width < 0 || height < 0) throw std::invalid_argument("negative profile size");
  for (Length c = 0; c < width; ++c) fenwick_add(height, height);
}

void FreeHeightProfile::fenwick_add(Length free_height, std::int64_t delta) {
  if (delta == 0) return;
  for (auto i = static_cast<std::size_t>(free_height) + 1; i < tree_.size(); i += i & (~i + 1)) {
    tree_[i] += delta;
  }
}

std::vector<Area> FreeHeightProfile::histogram() const {
  std::vector<Area> v(static_cast<std::size_t>(height_) + 1, 0);
  for (Length f : free_) v[f] += static_cast<Area>(f);
  return v;
}

Area FreeHeightProfile::supply_at_or_above(Length h) const {
  // Sum over free heights in [h, H] = total - prefix(h - 1).
  auto prefix = [this](Length k) {
    std::int64_t sum = 0;
    if (k < 0) return sum;
    k = std::min(k, height_);
    for (auto i = static_cast<std::size_t>(k) + 1; i > 0; i -= i & (~i + 1)) sum += tree_[i];
    return sum;
  };
  return static_cast<Area>(prefix(height_) - prefix(h - 1));
}

bool FreeHeightProfile::reserve(Length x0, Length x1, Length h) {
  if (h == 0 || x0 >= x1) return true;
  if (x0 < 0 || x1 > width()) return false;
  for (Length c = x0; c < x1; ++c) {
    if (free_[c] < h) return false;
  }
  for (Length c = x0; c < x1; ++c) {
    const Length f = free_[c];
    fenwick_add(f, -f);
    free_[c] = f - h;
    fenwick_add(f - h, f - h);
  }
  return true;
}

void FreeHeightProfile::release(Length x0, Length x1, Length h) {
  if (h == 0) return;
  for (Length c = x0; c < x1; ++c) {
    const Length f = free_[c];
    fenwick_add(f, -f);
    free_[c] = f + h;
    fenwick_add(f + h, f + h);
  }
}

// ---------------------------------------------------------------------------
// Commit and undo

namespace {

bool apply_charges(CommitToken& token, FreeHeightProfile& profile) {
  for (int k = 0; k < token.charge_count; ++k) {
    const ColumnCharge& c = token.charges[k];
    if (!profile.reserve(c.begin, c.end, c.height)) {
      for (int j = 0; j < k; ++j) {
        const ColumnCharge& d = token.charges[j];
        profile.release(d.begin, d.end, d.height);
      }
      return false;
    }
  }
  return true;
}

void add_charge(CommitToken& token, Length begin, Length end, Length height) {
  if (begin < end) token.charges[token.charge_count++] = {begin, end, height};
}

}  // namespace

std::optional<CommitToken> commit_interval(XVar& var, const Orientation& orientation,
                                           XInterval interval, FreeHeightProfile& profile) {
  if (var.state != XVar::State::kUnassigned) {
    throw ContractViolation("interval committed to an assigned variable");
  }
  if (interval.lo > interval.hi || interval.lo < 0 ||
      interval.hi + orientation.width > profile.width()) {
    throw ContractViolation("interval outside the box");
  }
  CommitToken token;
  token.previous = var;
  XVar next = var;
  next.orientation = orientation;
  next.lo = interval.lo;
  next.hi = interval.hi;
  if (interval.lo == interval.hi) {
    next.state = XVar::State::kFixed;
    next.x = interval.lo;
    add_charge(token, next.x, next.x + orientation.width, orientation.height);
  } else {
    next.state = XVar::State::kInterval;
    add_charge(token, next.compulsory_begin(), next.compulsory_end(), orientation.height);
  }
  if (!apply_charges(token, profile)) return std::nullopt;
  var = next;
  return token;
}

std::optional<CommitToken> commit_fixed(XVar& var, Length x, FreeHeightProfile& profile) {
  if (var.state != XVar::State::kInterval) {
    throw ContractViolation("x fixed on a variable without an interval");
  }
  if (x < var.lo || x > var.hi) throw ContractViolation("x outside the assigned interval");
  CommitToken token;
  token.previous = var;
  const Length w = var.orientation.width;
  const Length h = var.orientation.height;
  if (var.compulsory_width() > 0) {
    add_charge(token, x, var.compulsory_begin(), h);
    add_charge(token, var.compulsory_end(), x + w, h);
  } else {
    add_charge(token, x, x + w, h);
  }
  if (!apply_charges(token, profile)) return std::nullopt;
  var.state = XVar::State::kFixed;
  var.x = x;
  return token;
}

void undo(XVar& var, const CommitToken& token, FreeHeightProfile& profile) {
  for (int k = token.charge_count; k-- > 0;) {
    const ColumnCharge& c = token.charges[k];
    profile.release(c.begin, c.end, c.height);
  }
  var = token.previous;
}

// ---------------------------------------------------------------------------
// Wasted space

bool check_wasted_space(const FreeHeightProfile& profile, std::span<const PendingDemand> pending) {
  std::vector<PendingDemand> sorted(pending.begin(), pending.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const PendingDemand& a, const PendingDemand& b) { return a.height > b.height; });
  Area demand = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    demand += sorted[i].area;
    // Only check once all demands of this height are included.
    if (i + 1 < sorted.size() && sorted[i + 1].height == sorted[i].height) continue;
    if (sorted[i].height > profile.height()) {
      if (demand > 0) return false;
      continue;
    }
    if (demand > profile.supply_at_or_above(std::max<Length>(sorted[i].height, 1))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Small exhaustive packer

namespace {

struct Placed {
  Length x, y, w, h;
};

bool overlaps(const Placed& a, const Placed& b) {
  return a.x < b.x + b.w && b.x < a.x + a.w && a.y < b.y + b.h && b.y < a.y + a.h;
}

struct PackBudget {
  std::uint64_t limit = 0;
  std::uint64_t used = 0;
  bool exhausted() const { return limit != 0 && used >= limit; }
};

bool pack_rec(std::span<const std::vector<Orientation>> dims, std::size_t i,
              const std::vector<Length>& xs, const std::vector<Length>& ys, Length w, Length h,
              std::vector<Placed>& placed, PackBudget& budget) {
  if (i == dims.size()) return true;
  for (const Orientation& o : dims[i]) {
    if (o.width > w || o.height > h) continue;
    for (Length x : xs) {
      if (x + o.width > w) break;
      for (Length y : ys) {
        if (y + o.height > h) break;
        if (budget.exhausted()) return false;
        ++budget.used;
        const Placed p{x, y, o.width, o.height};
        bool ok = true;
        for (const Placed& q : placed) {
          if (overlaps(p, q)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        placed.push_back(p);
        if (pack_rec(dims, i + 1, xs, ys, w, h, placed, budget)) return true;
        if (budget.exhausted()) return false;
        placed.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

std::optional<bool> small_packing_exists(std::span<const std::vector<Orientation>> dims, Length w,
                                         Length h, std::uint64_t node_budget) {
  Area area = 0;
  for (const auto& options : dims) {
    if (options.empty()) return false;
    area += area_of(options.front().width, options.front().height);
  }
  if (area > area_of(w, h)) return false;
  std::vector<std::vector<Orientation>> sorted(dims.begin(), dims.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.front().width * a.front().height > b.front().width * b.front().height;
  });
  // Any packing can be pushed down and left until every coordinate is a sum
  // of other rects' dimensions.
  SumSet xs(w), ys(h);
  for (const auto& options : sorted) {
    std::vector<Length> ws, hs;
    for (const Orientation& o : options) {
      ws.push_back(o.width);
      hs.push_back(o.height);
    }
    xs.add_alternatives(ws);
    ys.add_alternatives(hs);
  }
  std::vector<Placed> placed;
  PackBudget budget{node_budget, 0};
  if (pack_rec(sorted, 0, xs.values(), ys.values(), w, h, placed, budget)) return true;
  if (budget.exhausted()) return std::nullopt;
  return false;
}

// ---------------------------------------------------------------------------
// Dominance

namespace {

constexpr std::size_t kMaxGapRects = 8;
// Gap packings that stay undecided after this many nodes count as not
// dominated, which only gives up pruning. Each tried position is a node.
constexpr std::uint64_t kGapNodeBudget = std::uint64_t{1} << 16;

class GapOracle {
 public:
  bool packable(std::vector<std::vector<Orientation>> dims, Length w, Length h) {
    if (dims.size() > kMaxGapRects) return false;
    Key key{w, h, {}};
    for (const auto& options : dims) {
      std::vector<std::pair<Length, Length>> k;
      for (const Orientation& o : options) k.emplace_back(o.width, o.height);
      std::sort(k.begin(), k.end());
      key.dims.push_back(std::move(k));
    }
    std::sort(key.dims.begin(), key.dims.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool result = small_packing_exists(dims, w, h, kGapNodeBudget).value_or(false);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  struct Key {
    Length w, h;
    std::vector<std::vector<std::pair<Length, Length>>> dims;
    bool operator<(const Key& o) const { return std::tie(w, h, dims) < std::tie(o.w, o.h, o.dims); }
  };
  std::map<Key, bool> memo_;
};

struct Other {
  std::vector<Orientation> options;
  // Earlier than the rect under test in the search order.
  bool earlier = false;
};

// Status of offset g for a rect of height h_r: dominated iff no other rect
// can protrude from the gap and all rects that fit pack together. A rect
// earlier in the order that fits the gap blocks the rule, so sliding r to the
// wall always yields a lexicographically smaller x-vector and two rects can
// never dominate each other's offsets.
bool gap_dominated(const std::vector<Other>& others, Length g, Length h_r, GapOracle& oracle) {
  std::vector<std::vector<Orientation>> fitters;
  for (const Other& other : others) {
    std::vector<Orientation> fitting;
    for (const Orientation& o : other.options) {
      if (o.width > g) continue;
      if (o.height > h_r || other.earlier) return false;
      fitting.push_back(o);
    }
    if (!fitting.empty()) fitters.push_back(std::move(fitting));
  }
  if (fitters.empty()) return true;
  return oracle.packable(std::move(fitters), g, h_r);
}

}  // namespace

DominanceTable build_dominance(const Instance& instance, const Box& box) {
  const std::size_t n = instance.rects.size();
  DominanceTable table(n);
  std::vector<std::vector<Orientation>> options(n);
  for (std::size_t i = 0; i < n; ++i) options[i] = orientations_in(instance.rects[i], box);
  std::vector<std::size_t> rank(n);
  const std::vector<int> order = order_rectangles(instance, box);
  for (std::size_t p = 0; p < order.size(); ++p) rank[order[p]] = p;
  GapOracle oracle;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Other> others;
    std::vector<Length> events;
    for (std::size_t s = 0; s < n; ++s) {
      if (s == r) continue;
      others.push_back({options[s], rank[s] < rank[r]});
      for (const Orientation& o : options[s]) events.push_back(o.width);
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    for (const Orientation& o : options[r]) {
      const Length g_max = box.width - o.width;
      Length prefix = g_max;
      for (Length e : events) {
        if (e > g_max) break;
        if (!gap_dominated(others, e, o.height, oracle)) {
          prefix = e - 1;
          break;
        }
      }
      table.set_prefix(instance.rects[r].id, o.rotated ? 1 : 0, std::max<Length>(prefix, 0));
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Ordering and interval planning

std::vector<int> order_rectangles(const Instance& instance, const Box& box) {
  (void)box;
  std::vector<int> order(instance.rects.size());
  std::iota(order.begin(), order.end(), 0);
  const auto& rects = instance.rects;
  if (instance.oriented) {
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return rects[a].width > rects[b].width;
    });
  } else {
    // Branching factor ~ 1/w + 1/h = (w + h) / (w h); fewest values first.
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      const Rect& ra = rects[a];
      const Rect& rb = rects[b];
      const __int128 lhs = static_cast<__int128>(ra.width + ra.height) * rb.width * rb.height;
      const __int128 rhs = static_cast<__int128>(rb.width + rb.height) * ra.width * ra.height;
      return lhs < rhs;
    });
  }
  return order;
}

double default_c_param(const Instance& instance) {
  return all_squares(instance) ? 0.35 : 0.2;
}

std::vector<XInterval> plan_intervals(Length width, Length box_width, double c_param,
                                      Length dominated_prefix, const SumSet* domain) {
  if (!(c_param > 0.0 && c_param <= 1.0)) {
    throw std::invalid_argument("interval factor must lie in (0, 1]");
  }
  std::vector<XInterval> out;
  const Length max_x = box_width - width;
  if (max_x < 0) return out;
  Length first = 0;
  if (dominated_prefix >= 1 && max_x >= 1) {
    out.push_back({0, 0});
    first = dominated_prefix + 1;
  }
  if (first > max_x) return out;

  const Length span = max_x - first + 1;
  const auto size = std::max<Length>(
      1, static_cast<Length>(std::ceil(c_param * static_cast<double>(width) - 1e-9)));
  Length branches = (span + size - 1) / size;

  std::vector<Length> values;
  if (domain != nullptr) {
    for (auto v = domain->next_at_or_above(first); v && *v <= max_x; v = domain->next_above(*v)) {
      values.push_back(*v);
    }
    if (values.empty()) return out;
    branches = std::min<Length>(branches, static_cast<Length>(values.size()));
  }
  const Length count = domain != nullptr ? static_cast<Length>(values.size()) : span;
  const Length base = count / branches;
  const Length extra = count % branches;
  Length offset = 0;
  for (Length b = 0; b < branches; ++b) {
    const Length len = base + (b < extra ? 1 : 0);
    if (domain != nullptr) {
      out.push_back({values[offset], values[offset + len - 1]});
    } else {
      out.push_back({first + offset, first + offset + len - 1});
    }
    offset += len;
  }
  return out;
}

// ---------------------------------------------------------------------------
// XSolver

XSolver::XSolver(const Instance& instance, const Box& box, XSearchConfig config)
    : instance_(instance),
      box_(box),
      config_(config),
      order_(order_rectangles(instance, box)),
      profile_(box.width, box.height) {
  const std::size_t n = instance.rects.size();
  dominance_ = config.use_dominance ? build_dominance(instance, box) : DominanceTable(n);
  if (config.high_precision) static_x_sums_ = separate_axis_sets(instance, box).first;
  orientations_.resize(n);
  plans_.resize(n);
  vars_.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    const Rect& r = instance.rects[order_[p]];
    vars_[p].rect_id = r.id;
    orientations_[p] = orientations_in(r, box);
    for (const Orientation& o : orientations_[p]) {
      plans_[p].push_back(plan_intervals(o.width, box.width, config.c_param,
                                         dominance_.dominated_prefix(r.id, o.rotated ? 1 : 0),
                                         static_x_sums_ ? &*static_x_sums_ : nullptr));
    }
  }
}

XSearchOutcome XSolver::solve(const XVisitor& visit, SearchStats& stats, const Deadline& deadline) {
  visit_ = &visit;
  stats_ = &stats;
  deadline_ = &deadline;
  outcome_ = XSearchOutcome{};
  for (const auto& options : orientations_) {
    if (options.empty()) return outcome_;
  }
  if (area_of(box_.width, box_.height) < total_area(instance_)) return outcome_;
  reset_demand();
  if (config_.use_wasted_space && !wasted_space_ok()) return outcome_;
  outcome_.stopped = !search();
  return outcome_;
}

PendingDemand XSolver::demand_of(int pos) const {
  const XVar& v = vars_[pos];
  switch (v.state) {
    case XVar::State::kUnassigned: {
      Length h = box_.height + 1;
      for (const Orientation& o : orientations_[pos]) h = std::min(h, o.height);
      return {h, instance_.rects[v.rect_id].area()};
    }
    case XVar::State::kInterval: {
      const Length w = v.orientation.width;
      const Length h = v.orientation.height;
      return {h, area_of(w - v.compulsory_width(), h)};
    }
    case XVar::State::kFixed:
      break;
  }
  return {0, 0};
}

void XSolver::move_demand(const PendingDemand& from, const PendingDemand& to) {
  demand_[std::min(from.height, box_.height + 1)] -= from.area;
  demand_[std::min(to.height, box_.height + 1)] += to.area;
}

void XSolver::reset_demand() {
  demand_.assign(static_cast<std::size_t>(box_.height) + 2, 0);
  std::vector<Length> heights;
  for (std::size_t p = 0; p < vars_.size(); ++p) {
    const PendingDemand d = demand_of(static_cast<int>(p));
    demand_[std::min(d.height, box_.height + 1)] += d.area;
    heights.push_back(std::min(d.height, box_.height + 1));
    for (const Orientation& o : orientations_[p]) heights.push_back(o.height);
  }
  std::sort(heights.begin(), heights.end(), std::greater<>());
  heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
  demand_heights_ = std::move(heights);
}

bool XSolver::wasted_space_ok() {
  if (!config_.use_wasted_space) return true;
  // Same test as check_wasted_space, over the incrementally kept demand.
  Area demand = 0;
  for (Length h : demand_heights_) {
    if (demand_[h] == 0) continue;
    demand += demand_[h];
    const bool ok = h > box_.height ? false : demand <= profile_.supply_at_or_above(std::max<Length>(h, 1));
    if (!ok) {
      outcome_.wasted_space_pruned = true;
      return false;
    }
  }
  return true;
}

Area XSolver::interval_reduction(int pos) const {
  for (std::size_t k = 0; k < plans_[pos].size(); ++k) {
    if (plans_[pos][k].empty()) continue;
    const XInterval iv = plans_[pos][k].front();
    const Orientation& o = orientations_[pos][k];
    if (iv.lo == iv.hi) return area_of(o.width, o.height);
    return area_of(std::max<Length>(0, iv.lo + o.width - iv.hi), o.height);
  }
  return 0;
}

bool XSolver::search() {
  ++stats_->nodes_x;
  deadline_->tick(stats_->nodes_x);
  const int n = static_cast<int>(vars_.size());
  const int a = next_unassigned_ < n ? next_unassigned_ : -1;
  int b = -1;
  for (int p = 0; p < next_unassigned_; ++p) {
    if (vars_[p].state == XVar::State::kInterval) {
      b = p;
      break;
    }
  }
  if (a < 0 && b < 0) return emit();
  if (b < 0) return branch_interval(a);
  if (a < 0) return branch_fixed(b);
  const XVar& vb = vars_[b];
  const Area residual_b =
      area_of(vb.orientation.width - vb.compulsory_width(), vb.orientation.height);
  // The candidate that removes more free space goes first; ties favour the
  // earlier rect in the fixed order, which is always b.
  return residual_b >= interval_reduction(a) ? branch_fixed(b) : branch_interval(a);
}

bool XSolver::branch_interval(int pos) {
  XVar& var = vars_[pos];
  for (std::size_t k = 0; k < orientations_[pos].size(); ++k) {
    for (const XInterval& iv : plans_[pos][k]) {
      const PendingDemand before = demand_of(pos);
      auto token = commit_interval(var, orientations_[pos][k], iv, profile_);
      if (!token) continue;
      const PendingDemand after = demand_of(pos);
      move_demand(before, after);
      ++next_unassigned_;
      outcome_.deepest_rect = std::max(outcome_.deepest_rect, pos);
      bool keep_going = true;
      if (wasted_space_ok()) keep_going = search();
      --next_unassigned_;
      undo(var, *token, profile_);
      move_demand(after, before);
      if (!keep_going) return false;
    }
  }
  return true;
}

SumSet XSolver::fixed_domain(int pos) const {
  std::vector<FixedSpan> fixed;
  std::vector<std::vector<Length>> unfixed;
  for (std::size_t p = 0; p < vars_.size(); ++p) {
    if (static_cast<int>(p) == pos) continue;
    const XVar& v = vars_[p];
    if (v.state == XVar::State::kFixed) {
      fixed.push_back({v.x, v.orientation.width});
    } else if (v.state == XVar::State::kInterval) {
      unfixed.push_back({v.orientation.width});
    } else {
      std::vector<Length> widths;
      for (const Orientation& o : orientations_[p]) widths.push_back(o.width);
      unfixed.push_back(std::move(widths));
    }
  }
  return dynamic_x_sums(fixed, unfixed, box_.width);
}

bool XSolver::branch_fixed(int pos) {
  XVar& var = vars_[pos];
  std::optional<SumSet> domain;
  if (config_.high_precision) domain = fixed_domain(pos);
  const Length lo = var.lo;
  const Length hi = var.hi;
  const PendingDemand before = demand_of(pos);
  for (Length x = lo; x <= hi; ++x) {
    if (domain) {
      auto next = domain->next_at_or_above(x);
      if (!next || *next > hi) break;
      x = *next;
    }
    auto token = commit_fixed(var, x, profile_);
    if (!token) continue;
    move_demand(before, {0, 0});
    bool keep_going = true;
    if (wasted_space_ok()) keep_going = search();
    undo(var, *token, profile_);
    move_demand({0, 0}, before);
    if (!keep_going) return false;
  }
  return true;
}

bool XSolver::emit() {
  ++stats_->x_solutions;
  XAssignment assignment;
  assignment.items.resize(vars_.size());
  for (const XVar& v : vars_) {
    assignment.items[v.rect_id] = {v.rect_id, v.x, v.orientation.width, v.orientation.height,
                                   v.orientation.rotated};
  }
  return (*visit_)(assignment);
}

}  // namespace rectpack
