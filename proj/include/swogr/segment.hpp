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

#include <algorithm>
#include <numeric>
#include <tuple>
#include <vector>

#include "swogr/config.hpp"
#include "swogr/geometry.hpp"
#include "swogr/swml.hpp"

namespace swogr {

// Horizontal overlap (px) of two boxes, 0 if disjoint.
inline int horizontal_overlap(const BBox& a, const BBox& b) noexcept {
  return std::max(0, std::min(a.right(), b.right()) - std::max(a.x, b.x));
}

inline int vertical_gap(const BBox& a, const BBox& b) noexcept {
  return std::max(0, std::max(a.y, b.y) - std::min(a.bottom(), b.bottom()));
}

// Two glyphs belong to the same sign when they share a column (overlap of
// at least column_overlap * the narrower width) and sit within signbox_gap
// of each other vertically.
inline bool glyphs_linked(const BBox& a, const BBox& b, const RecognizerConfig& cfg) noexcept {
  const int overlap = horizontal_overlap(a, b);
  return overlap > 0 && overlap >= cfg.column_overlap * std::min(a.w, b.w) &&
         vertical_gap(a, b) <= cfg.signbox_gap;
}

inline bool glyph_reading_order(const Glyph& a, const Glyph& b) noexcept {
  return std::tie(a.bbox.y, a.bbox.x, a.bbox.w, a.bbox.h, a.code, a.confidence) <
         std::tie(b.bbox.y, b.bbox.x, b.bbox.w, b.bbox.h, b.code, b.confidence);
}

// Single-linkage clustering of page-frame glyphs into sign boxes. Boxes are
// ordered by (x, y) of their bounds and numbered from 1; glyph boxes are
// rebased to the sign box origin and ordered by (y, x).
inline std::vector<SignBox> segment_signs(const std::vector<Glyph>& glyphs, [[maybe_unused]] int page_width,
                                          [[maybe_unused]] int page_height, const RecognizerConfig& cfg = {}) {
  const std::size_t n = glyphs.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };

  // Sweep in x: only glyphs whose x-ranges intersect can link.
  std::vector<std::size_t> by_x(n);
  std::iota(by_x.begin(), by_x.end(), 0);
  std::sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(glyphs[a].bbox.x, a) < std::tie(glyphs[b].bbox.x, b);
  });
  for (std::size_t i = 0; i < n; ++i) {
    const BBox& a = glyphs[by_x[i]].bbox;
    for (std::size_t j = i + 1; j < n && glyphs[by_x[j]].bbox.x < a.right(); ++j) {
      if (!glyphs_linked(a, glyphs[by_x[j]].bbox, cfg)) continue;
      const std::size_t ra = find(by_x[i]);
      const std::size_t rb = find(by_x[j]);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }

  std::vector<std::vector<std::size_t>> clusters;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = clusters.size();
      clusters.emplace_back();
    }
    clusters[slot[r]].push_back(i);
  }

  std::vector<SignBox> boxes;
  boxes.reserve(clusters.size());
  for (const auto& members : clusters) {
    SignBox sb;
    sb.bbox = glyphs[members.front()].bbox;
    for (std::size_t m : members) sb.bbox = unite(sb.bbox, glyphs[m].bbox);
    for (std::size_t m : members) {
      Glyph g = glyphs[m];
      g.bbox = g.bbox.translated(-sb.bbox.x, -sb.bbox.y);
      sb.glyphs.push_back(g);
    }
    std::sort(sb.glyphs.begin(), sb.glyphs.end(), glyph_reading_order);
    boxes.push_back(std::move(sb));
  }
  std::sort(boxes.begin(), boxes.end(), [](const SignBox& a, const SignBox& b) {
    if (a.bbox.x != b.bbox.x) return a.bbox.x < b.bbox.x;
    if (a.bbox.y != b.bbox.y) return a.bbox.y < b.bbox.y;
    return glyph_reading_order(a.glyphs.front(), b.glyphs.front());
  });
  for (std::size_t i = 0; i < boxes.size(); ++i) boxes[i].id = static_cast<int>(i) + 1;
  return boxes;
}

}  // namespace swogr
