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

#include "rectpack/benchmarks.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace rectpack {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
};

constexpr std::array<FamilyInfo, 7> kFamilyNames = {{
    {Family::kConsecutiveSquares, "consecutive-squares"},
    {Family::kUnorientedConsecutive, "unoriented-consecutive"},
    {Family::kOrientedEqualPerimeter, "oriented-equal-perimeter"},
    {Family::kUnorientedDoublePerimeter, "unoriented-double-perimeter"},
    {Family::kHighPrecision, "high-precision"},
    {Family::kDoublyScaled, "doubly-scaled"},
    {Family::kUniqueDimensions, "unique-dimensions"},
}};

Instance make_instance(Family family, int n, bool oriented) {
  Instance instance;
  instance.oriented = oriented;
  instance.family = std::string(family_name(family));
  instance.n = n;
  instance.label = instance.family + "-" + std::to_string(n);
  return instance;
}

void add_rect(Instance& instance, Length w, Length h) {
  Rect r;
  r.id = static_cast<int>(instance.rects.size());
  r.width = w;
  r.height = h;
  r.orientable = !instance.oriented;
  instance.rects.push_back(r);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& info : kFamilyNames) {
    if (info.family == family) return info.name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& info : kFamilyNames) {
    if (info.name == name) return info.family;
  }
  return std::nullopt;
}

Length lcm_upto(int n) {
  Area l = 1;
  for (int k = 2; k <= n; ++k) {
    const Area g = std::gcd(l, static_cast<Area>(k));
    l = checked_mul(l / g, static_cast<Area>(k));
  }
  if (l > static_cast<Area>(INT64_MAX)) throw PrecisionError("lcm");
  return static_cast<Length>(l);
}

Instance generate(Family family, int n) {
  if (n < 1) throw std::invalid_argument("benchmark size must be at least 1");
  const Length N = n;
  switch (family) {
    case Family::kConsecutiveSquares: {
      Instance inst = make_instance(family, n, /*oriented=*/true);
      for (Length k = 1; k <= N; ++k) add_rect(inst, k, k);
      return inst;
    }
    case Family::kUnorientedConsecutive: {
      Instance inst = make_instance(family, n, false);
      for (Length k = 1; k <= N; ++k) add_rect(inst, k, k + 1);
      return inst;
    }
    case Family::kOrientedEqualPerimeter: {
      Instance inst = make_instance(family, n, true);
      for (Length k = 1; k <= N; ++k) add_rect(inst, k, N + 1 - k);
      return inst;
    }
    case Family::kUnorientedDoublePerimeter: {
      Instance inst = make_instance(family, n, false);
      for (Length k = 1; k <= N; ++k) add_rect(inst, k, 2 * N - k);
      return inst;
    }
    case Family::kHighPrecision: {
      Instance inst = make_instance(family, n, false);
      inst.scale = lcm_upto(n + 1);
      for (Length k = 1; k <= N; ++k) {
        add_rect(inst, inst.scale / k, inst.scale / (k + 1));
      }
      return inst;
    }
    case Family::kDoublyScaled: {
      Instance inst = make_instance(family, n, false);
      for (Length k = 1; k <= N; ++k) add_rect(inst, 2 * k, 2 * k + 2);
      return inst;
    }
    case Family::kUniqueDimensions: {
      Instance inst = make_instance(family, n, false);
      for (Length k = 1; k <= N; ++k) add_rect(inst, 2 * k - 1, 2 * k);
      return inst;
    }
  }
  throw std::invalid_argument("unknown benchmark family");
}

Instance parse_custom(std::string_view text) {
  Instance inst;
  inst.family = "custom";
  inst.label = "custom";
  bool have_policy = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (!have_policy) {
      if (line != "o" && line != "u") {
        throw ParseError(line_no, "expected orientation policy 'o' or 'u'");
      }
      inst.oriented = line == "o";
      have_policy = true;
      continue;
    }
    Length dims[2] = {0, 0};
    const char* p = line.data();
    const char* last = line.data() + line.size();
    for (int k = 0; k < 2; ++k) {
      while (p < last && (*p == ' ' || *p == '\t')) ++p;
      auto [next, ec] = std::from_chars(p, last, dims[k]);
      if (ec != std::errc() || next == p) {
        throw ParseError(line_no, "expected two integers 'W H'");
      }
      p = next;
    }
    while (p < last && (*p == ' ' || *p == '\t')) ++p;
    if (p != last) throw ParseError(line_no, "trailing characters");
    if (dims[0] < 1 || dims[1] < 1) {
      throw ParseError(line_no, "dimensions must be positive");
    }
    if (inst.rects.size() >= kMaxCustomRects) {
      throw ParseError(line_no, "too many rectangles");
    }
    add_rect(inst, dims[0], dims[1]);
  }
  if (!have_policy) throw ParseError(line_no, "missing orientation policy");
  if (inst.rects.empty()) throw ParseError(line_no, "no rectangles given");
  try {
    (void)total_area(inst);
  } catch (const PrecisionError& e) {
    throw ParseError(line_no, e.what());
  }
  return inst;
}

std::string format_custom(const Instance& instance) {
  std::ostringstream out;
  out << (instance.oriented ? "o" : "u") << '\n';
  for (const Rect& r : instance.rects) {
    if (r.filler) continue;
    out << r.width << ' ' << r.height << '\n';
  }
  return out.str();
}

}  // namespace rectpack
