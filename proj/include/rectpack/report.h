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

// Output formats (JSON, SVG, text) and the known-optimum tables used for
// regression checks.

#ifndef RECTPACK_REPORT_H_
#define RECTPACK_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rectpack/bbox.h"
#include "rectpack/model.h"

namespace rectpack {

struct EmitOptions {
  // Include wall-clock milliseconds in the stats block. Off by default so
  // that identical runs produce identical bytes.
  bool timing = false;
};

std::string to_json(const Instance& instance, const EnumerationResult& result,
                    const EmitOptions& options = {});

struct ParsedReport {
  Instance instance;
  EnumerationResult result;
};

// Inverse of to_json. Throws std::invalid_argument on malformed input.
ParsedReport from_json(std::string_view text);

// A standalone drawing of one packing, one <rect> per placement.
std::string to_svg(const Instance& instance, const Solution& solution);
// Every solution of a result, stacked vertically in one document.
std::string to_svg(const Instance& instance, const EnumerationResult& result);

struct Rational {
  Length num = 0;
  Length den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational reduce(Length num, Length den);
std::string format_rational(const Rational& r);
// "WxH" with the multiplication sign, unscaled when scale > 1.
std::string format_box_pretty(const Box& box, Length scale);
// Boxes by descending width, comma separated.
std::string format_box_list(const std::vector<Box>& boxes, Length scale);

// One line per optimum: family, n, boxes, empty %, boxes tested.
std::string to_text(const Instance& instance, const EnumerationResult& result);

struct ReferenceRow {
  std::string family;
  int n = 0;
  // Scaled integer boxes, width <= height.
  std::vector<Box> boxes;
  // Unscaled boxes for scaled families, otherwise empty.
  std::vector<std::pair<Rational, Rational>> exact_boxes;
  std::optional<double> empty_pct;
  std::optional<Length> lcm;
  int boxes_tested = 0;
};

// Known optima; nullopt when the table has no row for (family, n).
std::optional<ReferenceRow> reference_row(std::string_view family, int n);
const std::vector<ReferenceRow>& reference_rows();

inline constexpr double kEmptyPctTolerance = 0.05;

struct ReferenceDiff {
  bool boxes_match = false;
  bool empty_match = true;
  bool lcm_match = true;
  bool ok() const { return boxes_match && empty_match && lcm_match; }
  // Informational: tested vs reference box counts.
  std::uint64_t boxes_tested = 0;
  int reference_boxes_tested = 0;
  std::string detail;
};

// Throws std::out_of_range when the tables have no such row.
ReferenceDiff compare_reference(const Instance& instance, const EnumerationResult& result);

}  // namespace rectpack

#endif  // RECTPACK_REPORT_H_
