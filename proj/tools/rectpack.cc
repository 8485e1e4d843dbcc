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

// rectpack solve: minimum-area bounding boxes for benchmark families or
// custom rectangle lists.
//
// Exit status: 0 success, 1 infeasible (contain mode), 2 bad configuration,
// 3 time limit hit before any result, 4 precision overflow.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rectpack/bbox.h"
#include "rectpack/benchmarks.h"
#include "rectpack/containment.h"
#include "rectpack/model.h"
#include "rectpack/report.h"
#include "rectpack/verify.h"

namespace {

using namespace rectpack;

enum class Mode { kAllOptimal, kFirstOptimal, kAnytime, kContain };
enum class Format { kJson, kSvg, kText };

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitConfig = 2;
constexpr int kExitTimeLimit = 3;
constexpr int kExitPrecision = 4;

struct RunConfig {
  std::string family;
  std::string instance_file;
  int n = 0;
  Mode mode = Mode::kAllOptimal;
  std::string box;
  double c_param = 0.0;
  PrecisionMode precision = PrecisionMode::kAuto;
  Format format = Format::kJson;
  std::string output;
  double time_limit = 0.0;
  bool verbose = false;
  bool timing = false;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Box parse_box(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw ConfigError("--box expects WxH, got '" + text + "'");
  try {
    std::size_t used_w = 0;
    std::size_t used_h = 0;
    const std::string ws = text.substr(0, x);
    const std::string hs = text.substr(x + 1);
    Box b{std::stoll(ws, &used_w), std::stoll(hs, &used_h)};
    if (used_w != ws.size() || used_h != hs.size() || b.width < 1 || b.height < 1) {
      throw ConfigError("--box dimensions must be positive integers");
    }
    return b;
  } catch (const std::logic_error&) {
    throw ConfigError("--box expects WxH, got '" + text + "'");
  }
}

Instance load_instance(const RunConfig& config) {
  if (!config.family.empty()) {
    const auto family = parse_family(config.family);
    if (!family) throw ConfigError("unknown family '" + config.family + "'");
    if (config.n < 1) throw ConfigError("--n must be at least 1");
    return generate(*family, config.n);
  }
  std::ifstream in(config.instance_file);
  if (!in) throw ConfigError("cannot read " + config.instance_file);
  std::stringstream text;
  text << in.rdbuf();
  try {
    Instance instance = parse_custom(text.str());
    instance.label = config.instance_file;
    return instance;
  } catch (const ParseError& e) {
    throw ConfigError(config.instance_file + ": " + e.what());
  }
}

std::string extension(Format format) {
  switch (format) {
    case Format::kJson: return ".json";
    case Format::kSvg: return ".svg";
    case Format::kText: return ".txt";
  }
  return "";
}

// Relative --output paths, and runs without --output, land in
// RECTPACK_OUTPUT_DIR when it is set.
std::optional<std::filesystem::path> output_path(const RunConfig& config,
                                                 const Instance& instance) {
  const char* dir = std::getenv("RECTPACK_OUTPUT_DIR");
  if (!config.output.empty()) {
    std::filesystem::path p(config.output);
    if (dir != nullptr && *dir != '\0' && p.is_relative()) p = std::filesystem::path(dir) / p;
    return p;
  }
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  std::string stem = instance.family.empty() ? "custom" : instance.family;
  if (instance.n > 0) stem += "-" + std::to_string(instance.n);
  return std::filesystem::path(dir) / (stem + extension(config.format));
}

std::string render(const Instance& instance, const EnumerationResult& result,
                   const RunConfig& config) {
  switch (config.format) {
    case Format::kJson: return to_json(instance, result, EmitOptions{config.timing});
    case Format::kSvg: return to_svg(instance, result);
    case Format::kText: return to_text(instance, result);
  }
  return "";
}

void write_artifact(const Instance& instance, const EnumerationResult& result,
                    const RunConfig& config) {
  for (const Solution& s : result.solutions) {
    if (!verify(instance, s).valid) throw std::logic_error("solver produced an invalid packing");
  }
  const std::string bytes = render(instance, result, config);
  const auto path = output_path(config, instance);
  if (!path) {
    std::cout << bytes;
    return;
  }
  if (path->has_parent_path()) std::filesystem::create_directories(path->parent_path());
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path->string());
  out << bytes;
}

EnumerationResult single(const Solution& s) {
  EnumerationResult r;
  r.optimal_area = s.box.area();
  r.optimal_boxes = {s.box};
  r.solutions = {s};
  r.stats = s.stats;
  return r;
}

Deadline make_deadline(double seconds) {
  if (seconds <= 0) return Deadline();
  return Deadline(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(seconds)));
}

int run(const RunConfig& config) {
  const Instance instance = load_instance(config);
  const Deadline deadline = make_deadline(config.time_limit);
  const auto log = [&](const std::string& line) {
    if (config.verbose) std::cerr << line << '\n';
  };

  switch (config.mode) {
    case Mode::kAllOptimal:
    case Mode::kFirstOptimal: {
      EnumerateConfig ec;
      ec.precision = config.precision;
      ec.c_param = config.c_param;
      ec.first_optimal = config.mode == Mode::kFirstOptimal;
      ec.on_box = [&](const Box& b, bool feasible) {
        log("tested " + format_box(b) + (feasible ? " feasible" : " infeasible"));
      };
      const EnumerationResult result = enumerate_all_optimal(instance, ec, deadline);
      write_artifact(instance, result, config);
      return kExitOk;
    }
    case Mode::kAnytime: {
      AnytimeConfig ac;
      ac.precision = config.precision;
      ac.c_param = config.c_param;
      const Solution best = anytime_search(
          instance,
          [&](const Solution& s) {
            std::cerr << "improved " << format_box_pretty(s.box, instance.scale) << " area "
                      << s.box.area() << '\n';
          },
          ac, deadline);
      write_artifact(instance, single(best), config);
      return kExitOk;
    }
    case Mode::kContain: {
      const Box box = parse_box(config.box);
      ContainmentConfig cc;
      cc.c_param = config.c_param;
      cc.high_precision = use_high_precision(instance, config.precision);
      const ContainmentResult result = test_box(instance, box, cc, deadline);
      if (!result.feasible()) {
        log(format_box(box) + " infeasible");
        return kExitInfeasible;
      }
      Solution s = result.solutions.front();
      s.stats = result.stats;
      write_artifact(instance, single(s), config);
      return kExitOk;
    }
  }
  return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-area bounding boxes for rectangle packing"};
  app.require_subcommand(1);
  RunConfig config;

  CLI::App* solve = app.add_subcommand("solve", "Search for optimal bounding boxes");
  auto* family = solve->add_option("--family", config.family,
                                   "Benchmark family, e.g. consecutive-squares");
  auto* file = solve->add_option("--instance", config.instance_file, "Instance text file")
                   ->check(CLI::ExistingFile);
  family->excludes(file);
  file->excludes(family);
  solve->add_option("--n", config.n, "Family size")->needs(family);
  const std::map<std::string, Mode> modes{{"all-optimal", Mode::kAllOptimal},
                                          {"first-optimal", Mode::kFirstOptimal},
                                          {"anytime", Mode::kAnytime},
                                          {"contain", Mode::kContain}};
  solve->add_option("--mode", config.mode, "all-optimal, first-optimal, anytime or contain")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
      ->option_text("MODE");
  auto* box = solve->add_option("--box", config.box, "Box WxH for contain mode");
  solve->add_option("--c-param", config.c_param, "Interval size factor, 0 for the instance default")
      ->check(CLI::Range(0.0, 1.0));
  const std::map<std::string, PrecisionMode> precisions{{"auto", PrecisionMode::kAuto},
                                                        {"low", PrecisionMode::kLow},
                                                        {"high", PrecisionMode::kHigh}};
  solve->add_option("--precision", config.precision, "auto, low or high")
      ->transform(CLI::CheckedTransformer(precisions, CLI::ignore_case))
      ->option_text("PRECISION");
  const std::map<std::string, Format> formats{
      {"json", Format::kJson}, {"svg", Format::kSvg}, {"text", Format::kText}};
  solve->add_option("--emit", config.format, "json, svg or text")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("FORMAT");
  solve->add_option("--output", config.output, "Output file (default stdout)");
  solve->add_option("--time-limit", config.time_limit, "Wall-clock limit in seconds")
      ->check(CLI::NonNegativeNumber);
  solve->add_flag("--verbose,-v", config.verbose, "Log tested boxes to stderr");
  solve->add_flag("--timing", config.timing, "Include milliseconds in JSON stats");

  try {
    app.parse(argc, argv);
    if (config.family.empty() && config.instance_file.empty()) {
      throw CLI::ValidationError("one of --family or --instance is required");
    }
    if ((config.mode == Mode::kContain) != (box->count() > 0)) {
      throw CLI::ValidationError("--box is required by, and only valid with, --mode contain");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    return run(config);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const TimeLimitReached&) {
    std::cerr << "error: time limit reached before any result\n";
    return kExitTimeLimit;
  } catch (const PrecisionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecision;
  }
}
