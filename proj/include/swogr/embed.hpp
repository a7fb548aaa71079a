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

// Result image: the source page in RGB with recognition boxes drawn on top.
// Colors: glyphs green with their code as a label, unrecognized components
// red, sign boxes blue (drawn 2 px outside their bounds).

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "swogr/engine.hpp"
#include "swogr/error.hpp"
#include "swogr/image.hpp"
#include "swogr/swml.hpp"

namespace swogr {

inline constexpr Rgb kGlyphColor{0, 160, 0};
inline constexpr Rgb kUnrecognizedColor{220, 0, 0};
inline constexpr Rgb kSignBoxColor{0, 80, 255};
inline constexpr int kSignBoxPad = 2;

enum class OverlayKind { glyph, unrecognized, signbox };

struct Overlay {
  OverlayKind kind;
  BBox rect;          // drawn outline, clipped to the image
  std::string label;  // glyph code, empty otherwise
};

struct AnnotatedResult {
  RgbImage image;
  SwmlDocument swml;
  std::vector<Overlay> overlays;
};

namespace detail {

// 3x5 bitmap font for digits and '-'; each row is 3 bits, MSB left.
inline const std::array<std::uint8_t, 5>* font_glyph(char c) noexcept {
  static constexpr std::array<std::array<std::uint8_t, 5>, 11> font{{
      {7, 5, 5, 5, 7}, {2, 6, 2, 2, 7}, {7, 1, 7, 4, 7}, {7, 1, 7, 1, 7}, {5, 5, 7, 1, 1},
      {7, 4, 7, 1, 7}, {7, 4, 7, 5, 7}, {7, 1, 1, 1, 1}, {7, 5, 7, 5, 7}, {7, 5, 7, 1, 7},
      {0, 0, 7, 0, 0},
  }};
  if (c >= '0' && c <= '9') return &font[static_cast<std::size_t>(c - '0')];
  if (c == '-') return &font[10];
  return nullptr;
}

inline constexpr int kFontAdvance = 4;
inline constexpr int kFontHeight = 5;

inline void draw_text(RgbImage& img, int x, int y, std::string_view text, Rgb color) {
  for (char c : text) {
    if (const auto* g = font_glyph(c)) {
      for (int row = 0; row < kFontHeight; ++row)
        for (int col = 0; col < 3; ++col)
          if (((*g)[static_cast<std::size_t>(row)] >> (2 - col)) & 1)
            if (img.in_bounds(x + col, y + row)) img.at(x + col, y + row) = color;
    }
    x += kFontAdvance;
  }
}

inline BBox clip(const BBox& b, int w, int h) noexcept {
  const int x0 = std::max(0, b.x);
  const int y0 = std::max(0, b.y);
  const int x1 = std::min(w, b.right());
  const int y1 = std::min(h, b.bottom());
  return {x0, y0, x1 - x0, y1 - y0};
}

inline void draw_rect(RgbImage& img, const BBox& r, Rgb color) {
  for (int x = r.x; x < r.right(); ++x) {
    img.at(x, r.y) = color;
    img.at(x, r.bottom() - 1) = color;
  }
  for (int y = r.y; y < r.bottom(); ++y) {
    img.at(r.x, y) = color;
    img.at(r.right() - 1, y) = color;
  }
}

}  // namespace detail

inline AnnotatedResult embed(const GrayImage& img, const RecognitionOutcome& outcome, std::string image_name = {}) {
  if (outcome.width != img.width() || outcome.height != img.height())
    throw DimensionMismatch("outcome was produced for a " + std::to_string(outcome.width) + "x" +
                            std::to_string(outcome.height) + " page");
  auto check = [&](const BBox& b) {
    if (b.empty() || !b.inside(img.width(), img.height()))
      throw DimensionMismatch("outcome box outside the source image");
  };
  for (const auto& g : outcome.glyphs) check(g.bbox);
  for (const auto& u : outcome.unrecognized) check(u);
  for (const auto& sb : outcome.signboxes) check(sb.bbox);

  AnnotatedResult res;
  res.image = RgbImage::from_gray(img);
  res.swml = to_document(outcome, std::move(image_name));

  for (const auto& sb : outcome.signboxes) {
    const BBox outer{sb.bbox.x - kSignBoxPad, sb.bbox.y - kSignBoxPad, sb.bbox.w + 2 * kSignBoxPad,
                     sb.bbox.h + 2 * kSignBoxPad};
    res.overlays.push_back({OverlayKind::signbox, detail::clip(outer, img.width(), img.height()), {}});
  }
  for (const auto& g : outcome.glyphs) res.overlays.push_back({OverlayKind::glyph, g.bbox, format_code(g.code)});
  for (const auto& u : outcome.unrecognized) res.overlays.push_back({OverlayKind::unrecognized, u, {}});

  for (const auto& o : res.overlays) {
    const Rgb color = o.kind == OverlayKind::glyph          ? kGlyphColor
                      : o.kind == OverlayKind::unrecognized ? kUnrecognizedColor
                                                            : kSignBoxColor;
    detail::draw_rect(res.image, o.rect, color);
  }
  // Labels last so boxes never cover them; above the box when there is room.
  for (const auto& o : res.overlays) {
    if (o.label.empty()) continue;
    const int y = o.rect.y >= detail::kFontHeight + 2 ? o.rect.y - detail::kFontHeight - 1 : o.rect.y + 2;
    detail::draw_text(res.image, o.rect.x, y, o.label, kGlyphColor);
  }
  return res;
}

}  // namespace swogr
