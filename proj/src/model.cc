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

#include "rectpack/model.h"

#include <map>
#include <stdexcept>

namespace rectpack {

Area checked_mul(Area a, Area b) {
  Area out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw PrecisionError(std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

Area checked_add(Area a, Area b) {
  Area out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw PrecisionError(std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

void Instance::validate() const {
  if (rects.empty()) throw std::invalid_argument("instance has no rectangles");
  if (scale < 1) throw std::invalid_argument("scale must be positive");
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const Rect& r = rects[i];
    if (r.id != static_cast<int>(i)) {
      throw std::invalid_argument("rect ids must be 0..n-1 in order");
    }
    if (r.width < 1 || r.height < 1) {
      throw std::invalid_argument("rect " + std::to_string(i) +
                                  " has a non-positive dimension");
    }
    if (r.filler && r.orientable) {
      throw std::invalid_argument("filler rects cannot be orientable");
    }
  }
  (void)total_area(*this);
}

SearchStats& SearchStats::operator+=(const SearchStats& other) {
  boxes_tested += other.boxes_tested;
  x_solutions += other.x_solutions;
  nodes_x += other.nodes_x;
  nodes_y += other.nodes_y;
  cpu_time += other.cpu_time;
  return *this;
}

Area total_area(const Instance& instance) {
  Area sum = 0;
  for (const Rect& r : instance.rects) {
    if (r.filler) continue;
    sum = checked_add(sum, r.area());
  }
  return sum;
}

std::pair<Length, Length> effective_dims(const Rect& rect, bool rotated) {
  if (rotated && !rect.orientable) {
    throw ContractViolation("rect " + std::to_string(rect.id) +
                            " is not orientable");
  }
  if (rotated) return {rect.height, rect.width};
  return {rect.width, rect.height};
}

int orientation_count(const Rect& rect) {
  return rect.orientable && !rect.is_square() ? 2 : 1;
}

bool all_squares(const Instance& instance) {
  for (const Rect& r : instance.rects) {
    if (!r.is_square()) return false;
  }
  return true;
}

bool dimension_symmetric(const Instance& instance) {
  std::map<std::pair<Length, Length>, int> counts;
  for (const Rect& r : instance.rects) ++counts[{r.width, r.height}];
  for (const auto& [dims, count] : counts) {
    auto it = counts.find({dims.second, dims.first});
    if (it == counts.end() || it->second != count) return false;
  }
  return true;
}

bool transpose_symmetric(const Instance& instance) {
  if (!instance.oriented) return true;
  return all_squares(instance) || dimension_symmetric(instance);
}

std::string format_box(const Box& box) {
  return std::to_string(box.width) + "x" + std::to_string(box.height);
}

}  // namespace rectpack
