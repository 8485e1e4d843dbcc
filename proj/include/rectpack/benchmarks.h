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

#ifndef RECTPACK_BENCHMARKS_H_
#define RECTPACK_BENCHMARKS_H_

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rectpack/model.h"

namespace rectpack {

enum class Family {
  kConsecutiveSquares,
  kUnorientedConsecutive,
  kOrientedEqualPerimeter,
  kUnorientedDoublePerimeter,
  kHighPrecision,
  kDoublyScaled,
  kUniqueDimensions,
};

inline constexpr std::array<Family, 7> kAllFamilies = {
    Family::kConsecutiveSquares,       Family::kUnorientedConsecutive,
    Family::kOrientedEqualPerimeter,   Family::kUnorientedDoublePerimeter,
    Family::kHighPrecision,            Family::kDoublyScaled,
    Family::kUniqueDimensions,
};

// Kebab-case name used on the command line and in JSON output.
std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

// Least common multiple of 1..n. Throws PrecisionError past 64 bits.
Length lcm_upto(int n);

// Builds the size-n member of a benchmark family, rects in generation order.
// Throws std::invalid_argument for n < 1.
Instance generate(Family family, int n);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline constexpr std::size_t kMaxCustomRects = 10000;

// Reads the instance text format: a first line "o" (oriented) or "u"
// (unoriented), then one "W H" pair of positive integers per line. Blank
// lines and '#' comments are ignored.
Instance parse_custom(std::string_view text);

// Inverse of parse_custom for scale-1 instances.
std::string format_custom(const Instance& instance);

}  // namespace rectpack

#endif  // RECTPACK_BENCHMARKS_H_
