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

#include "rectpack/subset_sums.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rectpack {

namespace {

constexpr int kWordBits = 64;

// out |= in << shift, both of `words` words; bits past the end fall off.
void or_shifted(const std::vector<std::uint64_t>& in, std::vector<std::uint64_t>& out,
                Length shift) {
  const auto words = static_cast<Length>(in.size());
  const Length ws = shift / kWordBits;
  const int bs = static_cast<int>(shift % kWordBits);
  for (Length i = words - 1; i >= ws; --i) {
    std::uint64_t v = in[i - ws] << bs;
    if (bs != 0 && i - ws - 1 >= 0) v |= in[i - ws - 1] >> (kWordBits - bs);
    out[i] |= v;
  }
}

}  // namespace

SumSet::SumSet(Length cap) : cap_(cap) {
  if (cap < 0) throw std::invalid_argument("sum set cap must be non-negative");
  bits_.assign(static_cast<std::size_t>(cap / kWordBits + 1), 0);
  bits_[0] = 1;
}

bool SumSet::contains(Length v) const {
  if (v < 0 || v > cap_) return false;
  return (bits_[v / kWordBits] >> (v % kWordBits)) & 1U;
}

std::size_t SumSet::size() const {
  std::size_t n = 0;
  for (auto w : bits_) n += std::popcount(w);
  return n;
}

void SumSet::insert(Length v) {
  if (v < 0 || v > cap_) return;
  bits_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void SumSet::add_dim(Length d) {
  if (d <= 0 || d > cap_) return;
  const std::vector<std::uint64_t> before = bits_;
  or_shifted(before, bits_, d);
  const int tail = static_cast<int>(cap_ % kWordBits) + 1;
  if (tail < kWordBits) bits_.back() &= (std::uint64_t{1} << tail) - 1;
}

void SumSet::add_alternatives(std::span<const Length> dims) {
  const std::vector<std::uint64_t> before = bits_;
  for (Length d : dims) {
    if (d <= 0 || d > cap_) continue;
    or_shifted(before, bits_, d);
  }
  const int tail = static_cast<int>(cap_ % kWordBits) + 1;
  if (tail < kWordBits) bits_.back() &= (std::uint64_t{1} << tail) - 1;
}

std::optional<Length> SumSet::next_at_or_above(Length v) const {
  if (v < 0) v = 0;
  if (v > cap_) return std::nullopt;
  auto i = static_cast<std::size_t>(v / kWordBits);
  std::uint64_t w = bits_[i] & (~std::uint64_t{0} << (v % kWordBits));
  while (true) {
    if (w != 0) return static_cast<Length>(i) * kWordBits + std::countr_zero(w);
    if (++i == bits_.size()) return std::nullopt;
    w = bits_[i];
  }
}

std::optional<Length> SumSet::prev_at_or_below(Length v) const {
  if (v < 0) return std::nullopt;
  if (v > cap_) v = cap_;
  auto i = static_cast<Length>(v / kWordBits);
  const int b = static_cast<int>(v % kWordBits);
  std::uint64_t mask = b == kWordBits - 1 ? ~std::uint64_t{0} : (std::uint64_t{1} << (b + 1)) - 1;
  std::uint64_t w = bits_[i] & mask;
  while (true) {
    if (w != 0) return i * kWordBits + (kWordBits - 1 - std::countl_zero(w));
    if (--i < 0) return std::nullopt;
    w = bits_[i];
  }
}

std::vector<Length> SumSet::values() const {
  std::vector<Length> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    std::uint64_t w = bits_[i];
    while (w != 0) {
      out.push_back(static_cast<Length>(i) * kWordBits + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

SumSet precompute(std::span<const Length> dims, Length cap) {
  SumSet set(cap);
  for (Length d : dims) set.add_dim(d);
  return set;
}

std::pair<SumSet, SumSet> separate_axis_sets(const Instance& instance, const Box& box) {
  std::vector<Length> widths;
  std::vector<Length> heights;
  for (const Rect& r : instance.rects) {
    if (r.filler) continue;
    if (instance.oriented) {
      widths.push_back(r.width);
      heights.push_back(r.height);
    } else {
      widths.push_back(r.width);
      widths.push_back(r.height);
    }
  }
  if (!instance.oriented) heights = widths;
  return {precompute(widths, box.width), precompute(heights, box.height)};
}

SumSet dynamic_x_sums(std::span<const FixedSpan> fixed,
                      std::span<const std::vector<Length>> unfixed_dims, Length cap) {
  SumSet set(cap);
  for (const FixedSpan& f : fixed) set.insert(f.x + f.width);
  for (const auto& dims : unfixed_dims) set.add_alternatives(dims);
  return set;
}

std::optional<std::vector<std::pair<std::size_t, std::size_t>>> unique_generator_grouped(
    Length target, std::span<const std::vector<Length>> groups) {
  if (target < 0) throw ContractViolation("negative subset-sum target");
  const std::size_t n = groups.size();
  const auto width = static_cast<std::size_t>(target) + 1;
  // ways[i][s]: number of choices over the first i groups reaching s, capped at 2.
  std::vector<std::vector<std::uint8_t>> ways(n + 1, std::vector<std::uint8_t>(width, 0));
  ways[0][0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Length> options = groups[i];
    std::sort(options.begin(), options.end());
    options.erase(std::unique(options.begin(), options.end()), options.end());
    for (std::size_t s = 0; s < width; ++s) {
      int count = ways[i][s];
      for (Length d : options) {
        if (d > 0 && static_cast<std::size_t>(d) <= s) count += ways[i][s - d];
      }
      ways[i + 1][s] = static_cast<std::uint8_t>(std::min(count, 2));
    }
  }
  const int total = ways[n][target];
  if (total == 0) throw ContractViolation("subset-sum target is not reachable");
  if (total > 1) return std::nullopt;

  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  auto s = static_cast<std::size_t>(target);
  for (std::size_t i = n; i-- > 0;) {
    if (ways[i][s] == 1) continue;
    for (std::size_t k = 0; k < groups[i].size(); ++k) {
      const Length d = groups[i][k];
      if (d > 0 && static_cast<std::size_t>(d) <= s && ways[i][s - d] == 1) {
        chosen.emplace_back(i, k);
        s -= d;
        break;
      }
    }
  }
  std::reverse(chosen.begin(), chosen.end());
  return chosen;
}

std::optional<std::vector<std::size_t>> unique_generator(Length target,
                                                         std::span<const Length> dims) {
  std::vector<std::vector<Length>> groups;
  groups.reserve(dims.size());
  for (Length d : dims) groups.push_back({d});
  auto chosen = unique_generator_grouped(target, groups);
  if (!chosen) return std::nullopt;
  std::vector<std::size_t> out;
  for (const auto& [group, option] : *chosen) out.push_back(group);
  return out;
}

}  // namespace rectpack
