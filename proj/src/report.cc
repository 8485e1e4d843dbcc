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

#include "rectpack/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rectpack/verify.h"

namespace rectpack {

using Json = nlohmann::ordered_json;

namespace {

Json box_json(const Box& b) { return Json{{"w", b.width}, {"h", b.height}}; }

Box box_from(const Json& j) { return {j.at("w").get<Length>(), j.at("h").get<Length>()}; }

}  // namespace

std::string to_json(const Instance& instance, const EnumerationResult& result,
                    const EmitOptions& options) {
  Json rects = Json::array();
  for (const Rect& r : instance.rects) {
    if (r.filler) continue;
    rects.push_back({{"id", r.id}, {"w", r.width}, {"h", r.height}, {"orientable", r.orientable}});
  }
  Json boxes = Json::array();
  for (const Box& b : result.optimal_boxes) boxes.push_back(box_json(b));
  Json solutions = Json::array();
  for (const Solution& s : result.solutions) {
    Json placements = Json::array();
    for (const Placement& p : s.placements) {
      placements.push_back({{"id", p.rect_id}, {"x", p.x}, {"y", p.y}, {"rot", p.rotated}});
    }
    solutions.push_back({{"box", box_json(s.box)}, {"placements", std::move(placements)}});
  }
  Json stats = {{"boxes_tested", result.stats.boxes_tested},
                {"x_solutions", result.stats.x_solutions},
                {"nodes_x", result.stats.nodes_x},
                {"nodes_y", result.stats.nodes_y}};
  if (options.timing) stats["ms"] = result.stats.milliseconds();
  Json doc = {{"instance",
               {{"family", instance.family},
                {"n", instance.n},
                {"scale", instance.scale},
                {"rects", std::move(rects)}}},
              {"optimal_area", result.optimal_area},
              {"boxes", std::move(boxes)},
              {"solutions", std::move(solutions)},
              {"stats", std::move(stats)}};
  return doc.dump(2) + "\n";
}

ParsedReport from_json(std::string_view text) {
  ParsedReport out;
  try {
    const Json doc = Json::parse(text);
    const Json& inst = doc.at("instance");
    out.instance.family = inst.at("family").get<std::string>();
    out.instance.n = inst.at("n").get<int>();
    out.instance.scale = inst.at("scale").get<Length>();
    bool any_orientable = false;
    for (const Json& r : inst.at("rects")) {
      Rect rect;
      rect.id = r.at("id").get<int>();
      rect.width = r.at("w").get<Length>();
      rect.height = r.at("h").get<Length>();
      rect.orientable = r.at("orientable").get<bool>();
      any_orientable = any_orientable || rect.orientable;
      out.instance.rects.push_back(rect);
    }
    out.instance.oriented = !any_orientable;
    out.result.optimal_area = doc.at("optimal_area").get<Area>();
    for (const Json& b : doc.at("boxes")) out.result.optimal_boxes.push_back(box_from(b));
    for (const Json& s : doc.at("solutions")) {
      Solution solution;
      solution.box = box_from(s.at("box"));
      for (const Json& p : s.at("placements")) {
        solution.placements.push_back({p.at("id").get<int>(), p.at("x").get<Length>(),
                                       p.at("y").get<Length>(), p.at("rot").get<bool>()});
      }
      out.result.solutions.push_back(std::move(solution));
    }
    const Json& stats = doc.at("stats");
    out.result.stats.boxes_tested = stats.at("boxes_tested").get<std::uint64_t>();
    out.result.stats.x_solutions = stats.at("x_solutions").get<std::uint64_t>();
    out.result.stats.nodes_x = stats.at("nodes_x").get<std::uint64_t>();
    out.result.stats.nodes_y = stats.at("nodes_y").get<std::uint64_t>();
    if (stats.contains("ms")) {
      out.result.stats.cpu_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::duration<double, std::milli>(stats.at("ms").get<double>()));
    }
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed result JSON: ") + e.what());
  }
  return out;
}

namespace {

std::string color_for(int id) {
  // Golden-angle hue steps keep neighbouring ids apart.
  const int hue = (id * 137) % 360;
  return "hsl(" + std::to_string(hue) + ",65%,70%)";
}

void append_svg_body(std::ostringstream& out, const Instance& instance, const Solution& solution) {
  const Length box_h = solution.box.height;
  for (const Placement& p : solution.placements) {
    const Rect& r = instance.rects.at(p.rect_id);
    const auto [w, h] = effective_dims(r, p.rotated);
    const Length top = box_h - p.y - h;
    out << "  <rect x=\"" << p.x << "\" y=\"" << top << "\" width=\"" << w << "\" height=\"" << h
        << "\" fill=\"" << color_for(r.id) << "\" stroke=\"black\" stroke-width=\""
        << std::max<Length>(1, std::min(solution.box.width, box_h) / 200)
        << "\" vector-effect=\"non-scaling-stroke\"/>\n";
    const Length font = std::max<Length>(1, std::min(w, h) / 2);
    out << "  <text x=\"" << p.x + w / 2.0 << "\" y=\"" << top + h / 2.0 << "\" font-size=\"" << font
        << "\" text-anchor=\"middle\" dominant-baseline=\"central\">" << r.id << "</text>\n";
  }
}

}  // namespace

std::string to_svg(const Instance& instance, const Solution& solution) {
  std::ostringstream out;
  const Box& b = solution.box;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << b.width << ' ' << b.height
      << "\" width=\"" << b.width << "\" height=\"" << b.height << "\">\n";
  append_svg_body(out, instance, solution);
  out << "</svg>\n";
  return out.str();
}

std::string to_svg(const Instance& instance, const EnumerationResult& result) {
  Length width = 0;
  Length height = 0;
  const Length gap = 1;
  for (const Solution& s : result.solutions) {
    width = std::max(width, s.box.width);
    height += s.box.height + gap;
  }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height
      << "\" width=\"" << width << "\" height=\"" << height << "\">\n";
  Length offset = 0;
  for (const Solution& s : result.solutions) {
    out << " <svg x=\"0\" y=\"" << offset << "\" width=\"" << s.box.width << "\" height=\""
        << s.box.height << "\" viewBox=\"0 0 " << s.box.width << ' ' << s.box.height << "\">\n";
    append_svg_body(out, instance, s);
    out << " </svg>\n";
    offset += s.box.height + gap;
  }
  out << "</svg>\n";
  return out.str();
}

Rational reduce(Length num, Length den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Length g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string format_rational(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::string format_box_pretty(const Box& box, Length scale) {
  if (scale <= 1) return std::to_string(box.width) + "×" + std::to_string(box.height);
  return format_rational(reduce(box.width, scale)) + "×" + format_rational(reduce(box.height, scale));
}

std::string format_box_list(const std::vector<Box>& boxes, Length scale) {
  std::vector<Box> sorted = boxes;
  std::sort(sorted.begin(), sorted.end(),
            [](const Box& a, const Box& b) { return a.width > b.width; });
  std::string out;
  for (const Box& b : sorted) {
    if (!out.empty()) out += ", ";
    out += format_box_pretty(b, scale);
  }
  return out;
}

std::string to_text(const Instance& instance, const EnumerationResult& result) {
  std::ostringstream out;
  const std::string family = instance.family.empty() ? "custom" : instance.family;
  char pct[32] = "-";
  if (!result.optimal_boxes.empty()) {
    std::snprintf(pct, sizeof pct, "%.2f%%", empty_percent(instance, result.optimal_boxes.front()));
  }
  out << family << "\t" << instance.n << "\t" << format_box_list(result.optimal_boxes, instance.scale)
      << "\t" << pct << "\t" << result.stats.boxes_tested;
  if (instance.scale > 1) out << "\t" << instance.scale;
  out << "\n";
  return out.str();
}

std::optional<ReferenceRow> reference_row(std::string_view family, int n) {
  for (const ReferenceRow& row : reference_rows()) {
    if (row.family == family && row.n == n) return row;
  }
  return std::nullopt;
}

namespace {

std::vector<Box> normalized(std::vector<Box> boxes) {
  for (Box& b : boxes) {
    if (b.width > b.height) std::swap(b.width, b.height);
  }
  std::sort(boxes.begin(), boxes.end());
  return boxes;
}

}  // namespace

ReferenceDiff compare_reference(const Instance& instance, const EnumerationResult& result) {
  const auto row = reference_row(instance.family, instance.n);
  if (!row) {
    throw std::out_of_range("no reference row for " + instance.family + " " +
                            std::to_string(instance.n));
  }
  ReferenceDiff diff;
  diff.boxes_tested = result.stats.boxes_tested;
  diff.reference_boxes_tested = row->boxes_tested;
  std::ostringstream detail;
  diff.boxes_match = normalized(result.optimal_boxes) == normalized(row->boxes);
  detail << "boxes " << format_box_list(result.optimal_boxes, instance.scale) << " vs "
         << format_box_list(row->boxes, row->lcm.value_or(1));
  if (row->empty_pct && !result.optimal_boxes.empty()) {
    const double pct = empty_percent(instance, result.optimal_boxes.front());
    diff.empty_match = std::fabs(pct - *row->empty_pct) <= kEmptyPctTolerance + 1e-9;
    char buf[64];
    std::snprintf(buf, sizeof buf, "; empty %.3f%% vs %.2f%%", pct, *row->empty_pct);
    detail << buf;
  }
  if (row->lcm) {
    diff.lcm_match = instance.scale == *row->lcm;
    detail << "; scale " << instance.scale << " vs " << *row->lcm;
  }
  detail << "; boxes tested " << diff.boxes_tested << " vs " << diff.reference_boxes_tested;
  diff.detail = detail.str();
  return diff;
}

}  // namespace rectpack
