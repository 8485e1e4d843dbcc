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

// Known optimal bounding boxes. Boxes are listed width x height with
// width <= height, in the order the source lists them.

#include <vector>

#include "rectpack/report.h"

namespace rectpack {

namespace {

struct IntegerRow {
  const char* family;
  int n;
  std::vector<Box> boxes;
  double empty_pct;
  int boxes_tested;
};

// Unscaled box: width num/den, height num/den.
struct ExactBox {
  Length wn, wd, hn, hd;
};

struct ScaledRow {
  int n;
  std::vector<ExactBox> boxes;
  Length lcm;
  int boxes_tested;
};

const std::vector<IntegerRow>& integer_rows() {
  static const std::vector<IntegerRow> rows = {
      {"consecutive-squares", 1, {{1, 1}}, 0.00, 1},
      {"consecutive-squares", 2, {{2, 3}}, 16.7, 1},
      {"consecutive-squares", 3, {{3, 5}}, 6.67, 1},
      {"consecutive-squares", 4, {{5, 7}}, 14.3, 1},
      {"consecutive-squares", 5, {{5, 12}}, 8.33, 1},
      {"consecutive-squares", 6, {{9, 11}}, 8.08, 1},
      {"consecutive-squares", 7, {{11, 14}, {7, 22}}, 9.09, 3},
      {"consecutive-squares", 8, {{14, 15}}, 2.86, 2},
      {"consecutive-squares", 9, {{15, 20}}, 5.00, 4},
      {"consecutive-squares", 10, {{15, 27}}, 4.94, 5},
      {"consecutive-squares", 11, {{19, 27}}, 1.36, 3},
      {"consecutive-squares", 12, {{23, 29}}, 2.55, 6},
      {"consecutive-squares", 13, {{22, 38}}, 2.03, 5},
      {"consecutive-squares", 14, {{23, 45}}, 1.93, 8},
      {"consecutive-squares", 15, {{23, 55}}, 1.98, 13},
      {"consecutive-squares", 16, {{28, 54}, {27, 56}}, 1.06, 10},
      {"consecutive-squares", 17, {{39, 46}}, 0.50, 5},
      {"consecutive-squares", 18, {{31, 69}}, 1.40, 14},
      {"consecutive-squares", 19, {{47, 53}}, 0.84, 12},
      {"consecutive-squares", 20, {{34, 85}}, 0.69, 14},
      {"consecutive-squares", 21, {{38, 88}}, 0.99, 20},
      {"consecutive-squares", 22, {{39, 98}}, 0.71, 17},
      {"consecutive-squares", 23, {{64, 68}}, 0.64, 19},
      {"consecutive-squares", 24, {{56, 88}}, 0.58, 19},
      {"consecutive-squares", 25, {{43, 129}}, 0.40, 17},
      {"consecutive-squares", 26, {{70, 89}}, 0.47, 21},
      {"consecutive-squares", 27, {{47, 148}, {74, 94}}, 0.37, 22},
      {"consecutive-squares", 28, {{63, 123}}, 0.45, 30},
      {"consecutive-squares", 29, {{81, 106}}, 0.36, 27},
      {"consecutive-squares", 30, {{51, 186}}, 0.33, 21},
      {"consecutive-squares", 31, {{91, 110}}, 0.33, 30},
      {"consecutive-squares", 32, {{85, 135}}, 0.31, 36},
      {"unoriented-consecutive", 1, {{1, 2}}, 0.00, 1},
      {"unoriented-consecutive", 2, {{2, 4}}, 0.00, 1},
      {"unoriented-consecutive", 3, {{4, 5}}, 0.00, 1},
      {"unoriented-consecutive", 4, {{5, 8}, {4, 10}}, 0.00, 2},
      {"unoriented-consecutive", 5, {{5, 14}}, 0.00, 2},
      {"unoriented-consecutive", 6, {{6, 19}}, 1.75, 2},
      {"unoriented-consecutive", 7, {{12, 14}}, 0.00, 2},
      {"unoriented-consecutive", 8, {{15, 16}}, 0.00, 1},
      {"unoriented-consecutive", 9, {{16, 21}, {14, 24}}, 1.79, 5},
      {"unoriented-consecutive", 10, {{17, 26}}, 0.45, 5},
      {"unoriented-consecutive", 11, {{22, 26}}, 0.00, 2},
      {"unoriented-consecutive", 12, {{21, 35}}, 0.95, 4},
      {"unoriented-consecutive", 13, {{26, 35}}, 0.00, 1},
      {"unoriented-consecutive", 14, {{32, 35}, {28, 40}}, 0.00, 2},
      {"unoriented-consecutive", 15, {{34, 40}}, 0.00, 1},
      {"unoriented-consecutive", 16, {{32, 51}}, 0.00, 2},
      {"unoriented-consecutive", 17, {{34, 57}}, 0.00, 2},
      {"unoriented-consecutive", 18, {{30, 76}}, 0.00, 3},
      {"unoriented-consecutive", 19, {{35, 76}, {38, 70}}, 0.00, 2},
      {"unoriented-consecutive", 20, {{35, 88}, {44, 70}, {55, 56}}, 0.00, 4},
      {"unoriented-consecutive", 21, {{39, 91}}, 0.20, 2},
      {"unoriented-consecutive", 22, {{44, 92}}, 0.00, 2},
      {"unoriented-consecutive", 23, {{40, 115}, {46, 100}}, 0.00, 3},
      {"unoriented-consecutive", 24, {{40, 130}, {52, 100}, {65, 80}}, 0.00, 4},
      {"unoriented-consecutive", 25, {{45, 130}, {65, 90}, {75, 78}}, 0.00, 5},
      {"unoriented-consecutive", 26, {{42, 156}, {52, 126}, {56, 117}, {63, 104}, {72, 91}, {78, 84}}, 0.00, 7},
      {"unoriented-consecutive", 27, {{63, 116}}, 0.00, 3},
      {"unoriented-consecutive", 28, {{56, 145}, {70, 116}}, 0.00, 3},
      {"unoriented-consecutive", 29, {{62, 145}}, 0.00, 2},
      {"oriented-equal-perimeter", 1, {{1, 1}}, 0.00, 1},
      {"oriented-equal-perimeter", 2, {{2, 3}}, 33.3, 1},
      {"oriented-equal-perimeter", 3, {{3, 4}}, 16.7, 1},
      {"oriented-equal-perimeter", 4, {{4, 6}}, 16.7, 1},
      {"oriented-equal-perimeter", 5, {{6, 7}}, 16.7, 4},
      {"oriented-equal-perimeter", 6, {{6, 10}}, 6.67, 2},
      {"oriented-equal-perimeter", 7, {{8, 11}}, 4.55, 2},
      {"oriented-equal-perimeter", 8, {{8, 16}}, 6.25, 5},
      {"oriented-equal-perimeter", 9, {{11, 16}}, 6.25, 6},
      {"oriented-equal-perimeter", 10, {{11, 21}}, 4.76, 8},
      {"oriented-equal-perimeter", 11, {{14, 21}}, 2.72, 6},
      {"oriented-equal-perimeter", 12, {{13, 29}}, 3.45, 7},
      {"oriented-equal-perimeter", 13, {{16, 29}}, 1.94, 7},
      {"oriented-equal-perimeter", 14, {{19, 30}, {15, 38}}, 1.75, 7},
      {"oriented-equal-perimeter", 15, {{24, 29}}, 2.30, 10},
      {"oriented-equal-perimeter", 16, {{23, 36}}, 1.45, 9},
      {"oriented-equal-perimeter", 17, {{24, 41}}, 1.52, 8},
      {"oriented-equal-perimeter", 18, {{24, 48}}, 1.04, 12},
      {"oriented-equal-perimeter", 19, {{32, 42}, {24, 56}}, 1.04, 12},
      {"oriented-equal-perimeter", 20, {{37, 42}}, 0.90, 11},
      {"oriented-equal-perimeter", 21, {{35, 51}}, 0.78, 9},
      {"oriented-equal-perimeter", 22, {{34, 60}}, 0.78, 15},
      {"oriented-equal-perimeter", 23, {{38, 61}}, 0.78, 16},
      {"unoriented-double-perimeter", 1, {{1, 1}}, 0.00, 1},
      {"unoriented-double-perimeter", 2, {{3, 3}}, 22.2, 1},
      {"unoriented-double-perimeter", 3, {{3, 8}}, 8.33, 2},
      {"unoriented-double-perimeter", 4, {{6, 9}}, 7.41, 2},
      {"unoriented-double-perimeter", 5, {{6, 17}}, 6.86, 8},
      {"unoriented-double-perimeter", 6, {{9, 19}}, 5.85, 9},
      {"unoriented-double-perimeter", 7, {{13, 20}}, 3.08, 11},
      {"unoriented-double-perimeter", 8, {{18, 21}}, 1.59, 8},
      {"unoriented-double-perimeter", 9, {{13, 41}}, 1.50, 13},
      {"unoriented-double-perimeter", 10, {{24, 30}}, 0.69, 8},
      {"unoriented-double-perimeter", 11, {{29, 33}}, 1.15, 12},
      {"unoriented-double-perimeter", 12, {{21, 59}}, 1.37, 17},
      {"unoriented-double-perimeter", 13, {{38, 41}}, 0.71, 13},
      {"unoriented-double-perimeter", 14, {{38, 51}, {17, 114}}, 0.67, 17},
      {"unoriented-double-perimeter", 15, {{44, 54}}, 0.67, 21},
      {"unoriented-double-perimeter", 16, {{45, 64}, {30, 96}, {40, 72}, {48, 60}}, 0.83, 35},
      {"unoriented-double-perimeter", 17, {{39, 88}, {52, 66}}, 0.44, 27},
      {"unoriented-double-perimeter", 18, {{55, 74}}, 0.57, 35},
  };
  return rows;
}

// High-precision family: rects 1/k x 1/(k+1), scaled by the LCM.
const std::vector<ScaledRow>& scaled_rows() {
  static const std::vector<ScaledRow> rows = {
      {1, {{1, 2, 1, 1}}, 2, 1},
      {2, {{1, 2, 4, 3}}, 6, 1},
      {3, {{1, 2, 19, 12}}, 12, 2},
      {4, {{5, 6, 1, 1}, {1, 2, 5, 3}}, 60, 4},
      {5, {{1, 2, 17, 10}}, 60, 7},
      {6, {{1, 2, 107, 60}}, 420, 29},
      {7, {{1, 2, 107, 60}}, 840, 46},
      {8, {{1, 2, 163, 90}}, 2520, 124},
      {9, {{1, 2, 163, 90}}, 2520, 192},
      {10, {{1, 2, 1817, 990}}, 27720, 585},
      {11, {{1, 2, 7367, 3960}}, 27720, 1641},
      {12, {{1, 2, 67, 36}}, 360360, 2366},
      {13, {{1, 2, 185, 99}}, 360360, 5027},
      {14, {{1, 2, 169, 90}}, 360360, 9548},
      {15, {{1, 2, 79, 42}}, 720720, 15334},
  };
  return rows;
}

}  // namespace

const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = [] {
    std::vector<ReferenceRow> out;
    for (const IntegerRow& r : integer_rows()) {
      ReferenceRow row;
      row.family = r.family;
      row.n = r.n;
      row.boxes = r.boxes;
      row.empty_pct = r.empty_pct;
      row.boxes_tested = r.boxes_tested;
      out.push_back(std::move(row));
    }
    for (const ScaledRow& r : scaled_rows()) {
      ReferenceRow row;
      row.family = "high-precision";
      row.n = r.n;
      row.lcm = r.lcm;
      row.boxes_tested = r.boxes_tested;
      for (const ExactBox& b : r.boxes) {
        row.exact_boxes.push_back({reduce(b.wn, b.wd), reduce(b.hn, b.hd)});
        row.boxes.push_back({b.wn * (r.lcm / b.wd), b.hn * (r.lcm / b.hd)});
      }
      out.push_back(std::move(row));
    }
    return out;
  }();
  return rows;
}

}  // namespace rectpack
