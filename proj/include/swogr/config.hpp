// Copyright 2026 The swogr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "swogr/error.hpp"

namespace swogr {

// Thresholds of the rule cascade and the sign segmenter. Defaults separate
// the shipped archetypes on synthetic renders; handwriting corpora will need
// their own values.
struct RecognizerConfig {
  double tau_circ = 0.80;           // round shapes: circularity at or above
  double tau_fill = 0.60;           // filled vs outline: fill_ratio cut
  double tau_elong = 3.0;           // arrows: elongation at or above
  double tau_extent_square = 0.80;  // squares: outer extent at or above
  long long min_area = 16;          // smaller components are dropped
  int signbox_gap = 40;             // max vertical gap inside one sign, px
  double column_overlap = 0.3;      // min horizontal overlap / min width

  double max_round_aspect = 1.3;    // bbox aspect ceiling for round/square shapes
  double max_index_aspect = 3.0;    // bbox aspect ceiling for the index hand
  double tau_extent_star = 0.5;     // contact stars: outer extent below
  double arrow_head_ratio = 1.8;    // arrowhead width over median shaft width
  int min_hole_area = 4;            // smaller enclosed regions are not holes

  bool operator==(const RecognizerConfig&) const = default;
};

namespace detail {

struct ConfigField {
  std::string_view key;
  std::function<void(RecognizerConfig&, double)> set;
  std::function<double(const RecognizerConfig&)> get;
  bool integral;
};

inline const std::vector<ConfigField>& config_fields() {
  static const std::vector<ConfigField> fields{
      {"tau_circ", [](RecognizerConfig& c, double v) { c.tau_circ = v; },
       [](const RecognizerConfig& c) { return c.tau_circ; }, false},
      {"tau_fill", [](RecognizerConfig& c, double v) { c.tau_fill = v; },
       [](const RecognizerConfig& c) { return c.tau_fill; }, false},
      {"tau_elong", [](RecognizerConfig& c, double v) { c.tau_elong = v; },
       [](const RecognizerConfig& c) { return c.tau_elong; }, false},
      {"tau_extent_square", [](RecognizerConfig& c, double v) { c.tau_extent_square = v; },
       [](const RecognizerConfig& c) { return c.tau_extent_square; }, false},
      {"min_area", [](RecognizerConfig& c, double v) { c.min_area = static_cast<long long>(v); },
       [](const RecognizerConfig& c) { return static_cast<double>(c.min_area); }, true},
      {"signbox_gap", [](RecognizerConfig& c, double v) { c.signbox_gap = static_cast<int>(v); },
       [](const RecognizerConfig& c) { return static_cast<double>(c.signbox_gap); }, true},
      {"column_overlap", [](RecognizerConfig& c, double v) { c.column_overlap = v; },
       [](const RecognizerConfig& c) { return c.column_overlap; }, false},
      {"max_round_aspect", [](RecognizerConfig& c, double v) { c.max_round_aspect = v; },
       [](const RecognizerConfig& c) { return c.max_round_aspect; }, false},
      {"max_index_aspect", [](RecognizerConfig& c, double v) { c.max_index_aspect = v; },
       [](const RecognizerConfig& c) { return c.max_index_aspect; }, false},
      {"tau_extent_star", [](RecognizerConfig& c, double v) { c.tau_extent_star = v; },
       [](const RecognizerConfig& c) { return c.tau_extent_star; }, false},
      {"arrow_head_ratio", [](RecognizerConfig& c, double v) { c.arrow_head_ratio = v; },
       [](const RecognizerConfig& c) { return c.arrow_head_ratio; }, false},
      {"min_hole_area", [](RecognizerConfig& c, double v) { c.min_hole_area = static_cast<int>(v); },
       [](const RecognizerConfig& c) { return static_cast<double>(c.min_hole_area); }, true},
  };
  return fields;
}

inline std::string_view trim_ws(std::string_view s) noexcept {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline std::vector<std::string_view> config_keys() {
  std::vector<std::string_view> keys;
  for (const auto& f : detail::config_fields()) keys.push_back(f.key);
  return keys;
}

inline void validate(const RecognizerConfig& c) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(std::string("invalid config: ") + what);
  };
  require(c.tau_circ > 0 && c.tau_circ <= 1, "tau_circ must lie in (0,1]");
  require(c.tau_fill > 0 && c.tau_fill <= 1, "tau_fill must lie in (0,1]");
  require(c.tau_elong >= 1, "tau_elong must be >= 1");
  require(c.tau_extent_square > 0 && c.tau_extent_square <= 1, "tau_extent_square must lie in (0,1]");
  require(c.min_area >= 4, "min_area must be >= 4");
  require(c.signbox_gap >= 0, "signbox_gap must be >= 0");
  require(c.column_overlap >= 0 && c.column_overlap <= 1, "column_overlap must lie in [0,1]");
  require(c.max_round_aspect >= 1, "max_round_aspect must be >= 1");
  require(c.max_index_aspect > c.max_round_aspect, "max_index_aspect must exceed max_round_aspect");
  require(c.tau_extent_star > 0 && c.tau_extent_star <= 1, "tau_extent_star must lie in (0,1]");
  require(c.arrow_head_ratio > 1, "arrow_head_ratio must be > 1");
  require(c.min_hole_area >= 1, "min_hole_area must be >= 1");
}

// Sets one field by its key; value must parse fully as a number.
inline void set_config_value(RecognizerConfig& cfg, std::string_view key, std::string_view value) {
  for (const auto& f : detail::config_fields()) {
    if (f.key != key) continue;
    const std::string v(detail::trim_ws(value));
    char* end = nullptr;
    const double d = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(d))
      throw ConfigError("config key '" + std::string(key) + "': '" + v + "' is not a number");
    if (f.integral && d != std::floor(d))
      throw ConfigError("config key '" + std::string(key) + "' expects an integer");
    f.set(cfg, d);
    return;
  }
  throw ConfigError("unknown config key '" + std::string(key) + "'");
}

// "key = value" lines; '#' starts a comment line. Keys absent from the text
// keep the values of base.
inline RecognizerConfig parse_config(std::string_view text, RecognizerConfig base = {}) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = detail::trim_ws(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    try {
      set_config_value(base, detail::trim_ws(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  validate(base);
  return base;
}

inline RecognizerConfig load_config_file(const std::string& path, RecognizerConfig base = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), base);
}

inline std::string format_config(const RecognizerConfig& cfg) {
  std::string out;
  for (const auto& f : detail::config_fields()) {
    const double v = f.get(cfg);
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out += std::string(f.key) + " = " + std::string(buf, ptr) + "\n";
  }
  return out;
}

}  // namespace swogr
