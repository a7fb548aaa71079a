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

// Pen input: polylines on a canvas, rasterized with a 2-px pen and fed to
// the page recognizer.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "swogr/engine.hpp"
#include "swogr/error.hpp"
#include "swogr/geometry.hpp"
#include "swogr/image.hpp"

namespace swogr {

struct StrokeSet {
  int width = 0;
  int height = 0;
  std::vector<std::vector<Point>> strokes;
  bool operator==(const StrokeSet&) const = default;

  bool has_ink() const noexcept {
    return std::any_of(strokes.begin(), strokes.end(), [](const auto& s) { return !s.empty(); });
  }
};

inline constexpr double kPenRadius = 1.0;

namespace detail {

inline void stamp_segment(GrayImage& img, Point a, Point b) {
  const int x0 = std::max(0, static_cast<int>(std::floor(std::min(a.x, b.x) - kPenRadius)));
  const int x1 = std::min(img.width() - 1, static_cast<int>(std::ceil(std::max(a.x, b.x) + kPenRadius)));
  const int y0 = std::max(0, static_cast<int>(std::floor(std::min(a.y, b.y) - kPenRadius)));
  const int y1 = std::min(img.height() - 1, static_cast<int>(std::ceil(std::max(a.y, b.y) + kPenRadius)));
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      double t = len2 > 0 ? ((x - a.x) * dx + (y - a.y) * dy) / len2 : 0.0;
      t = std::clamp(t, 0.0, 1.0);
      const double ex = x - (a.x + t * dx);
      const double ey = y - (a.y + t * dy);
      if (ex * ex + ey * ey <= kPenRadius * kPenRadius) img.at(x, y) = 0;
    }
  }
}

}  // namespace detail

// Each stroke is drawn as straight segments between consecutive samples; a
// single-sample stroke leaves a dot.
inline GrayImage rasterize_strokes(const StrokeSet& set) {
  GrayImage img(set.width, set.height, 255);
  for (const auto& stroke : set.strokes) {
    if (stroke.empty()) continue;
    if (stroke.size() == 1) detail::stamp_segment(img, stroke[0], stroke[0]);
    for (std::size_t i = 1; i < stroke.size(); ++i) detail::stamp_segment(img, stroke[i - 1], stroke[i]);
  }
  return img;
}

inline RecognitionOutcome recognize_strokes(const StrokeSet& set, const SymbolCatalog& catalog = default_catalog(),
                                            const RecognizerConfig& cfg = {}) {
  if (!set.has_ink()) throw EmptyInk();
  return recognize_page(rasterize_strokes(set), catalog, cfg);
}

// Wire form: {"canvas":{"w":int,"h":int},"strokes":[[[x,y],...],...]}
inline StrokeSet strokes_from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& what) -> StrokeSet { throw Error("invalid stroke set: " + what); };
  if (!j.is_object() || !j.contains("canvas") || !j.contains("strokes")) return fail("expected canvas and strokes");
  const auto& canvas = j.at("canvas");
  if (!canvas.is_object() || !canvas.contains("w") || !canvas.contains("h") ||
      !canvas.at("w").is_number_integer() || !canvas.at("h").is_number_integer())
    return fail("canvas needs integer w and h");
  StrokeSet set;
  set.width = canvas.at("w").get<int>();
  set.height = canvas.at("h").get<int>();
  if (set.width < 1 || set.height < 1) return fail("canvas dimensions must be positive");
  const auto& strokes = j.at("strokes");
  if (!strokes.is_array()) return fail("strokes must be an array");
  for (const auto& s : strokes) {
    if (!s.is_array()) return fail("each stroke must be an array of points");
    std::vector<Point> pts;
    for (const auto& p : s) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
        return fail("points must be [x, y] integer pairs");
      pts.push_back({p[0].get<int>(), p[1].get<int>()});
    }
    set.strokes.push_back(std::move(pts));
  }
  return set;
}

inline nlohmann::json strokes_to_json(const StrokeSet& set) {
  nlohmann::json strokes = nlohmann::json::array();
  for (const auto& s : set.strokes) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : s) pts.push_back({p.x, p.y});
    strokes.push_back(std::move(pts));
  }
  return {{"canvas", {{"w", set.width}, {"h", set.height}}}, {"strokes", std::move(strokes)}};
}

}  // namespace swogr
