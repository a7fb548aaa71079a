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
#include <array>
#include <cmath>
#include <numbers>

#include "swogr/catalog.hpp"
#include "swogr/error.hpp"
#include "swogr/image.hpp"

namespace swogr {

inline constexpr double kMinRenderScale = 0.25;
inline constexpr double kMaxRenderScale = 4.0;
inline constexpr int kRenderMargin = 4;

namespace detail {

inline double segment_distance(double px, double py, double ax, double ay, double bx,
                               double by) noexcept {
  const double dx = bx - ax;
  const double dy = by - ay;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double ex = px - (ax + t * dx);
  const double ey = py - (ay + t * dy);
  return std::sqrt(ex * ex + ey * ey);
}

// Geometry of one template in its local frame: origin at the shape centre,
// y down, pointing "up" at rotation 1.
struct TemplateShape {
  Primitive primitive;
  double size;  // nominal size * scale
  double half;  // stroke half-width

  double extent_x() const noexcept {
    switch (primitive) {
      case Primitive::straight_arrow: return std::max(0.1 * size, half);
      default: return 0.5 * size + (primitive == Primitive::contact_star ? half : 0.0);
    }
  }
  double extent_y() const noexcept {
    switch (primitive) {
      case Primitive::square_with_finger: return 0.5 * (size + 0.75 * size) + half;
      case Primitive::straight_arrow: return 0.5 * size + half;
      default: return extent_x();
    }
  }

  bool ink(double x, double y) const noexcept {
    const double r = std::sqrt(x * x + y * y);
    const double cheb = std::max(std::abs(x), std::abs(y));
    const double a = 0.5 * size;
    switch (primitive) {
      case Primitive::circle_outline: return std::abs(r - (a - half)) <= half;
      case Primitive::circle_filled: return r <= a;
      case Primitive::square_outline: return cheb <= a && cheb > a - 2 * half;
      case Primitive::square_filled: return cheb <= a;
      case Primitive::square_with_finger: {
        const double finger = 0.75 * size;
        const double sy = y - 0.5 * finger;  // square centred below the finger
        const double c = std::max(std::abs(x), std::abs(sy));
        if (c <= a && c > a - 2 * half) return true;
        const double top = 0.5 * finger - a;
        return segment_distance(x, y, 0, top, 0, top - finger) <= half;
      }
      case Primitive::straight_arrow: {
        const double tip = -0.5 * size;
        const double head_len = 0.25 * size;
        const double head_half = 0.1 * size;
        const double base = tip + head_len;
        if (segment_distance(x, y, 0, 0.5 * size, 0, base) <= half) return true;
        if (y < tip || y > base) return false;
        return std::abs(x) <= head_half * (y - tip) / head_len + 1e-9;
      }
      case Primitive::contact_star: {
        for (int k = 0; k < 4; ++k) {
          const double ang = k * std::numbers::pi / 4.0;
          const double ux = 0.5 * size * std::sin(ang);
          const double uy = 0.5 * size * std::cos(ang);
          if (segment_distance(x, y, -ux, -uy, ux, uy) <= half) return true;
        }
        return false;
      }
    }
    return false;
  }
};

}  // namespace detail

// Whole-pixel widths: a fractional stroke rasterizes unevenly between sides.
inline double stroke_half_width(double scale) noexcept { return 0.5 * std::max(1.0, std::round(2 * scale)); }

// Deterministic raster of a catalog template: ink 0 on white 255, stroke
// round(2*scale) pixels wide (at least 1), rotated (rotation_step - 1)
// * 45 degrees counterclockwise.
inline GrayImage render_template(const SymbolMeta& meta, double scale, int rotation_step = 1) {
  const GlyphTemplate& t = meta.glyph_template;
  if (!(scale >= kMinRenderScale && scale <= kMaxRenderScale))
    throw OutOfRange("render scale must lie in [0.25, 4]");
  if (rotation_step < 1 || rotation_step > t.orientation_steps)
    throw OutOfRange("rotation step " + std::to_string(rotation_step) + " outside [1, " +
                     std::to_string(t.orientation_steps) + "]");
  if (t.nominal_size <= 0 || primitive_name(t.primitive) == "unknown")
    throw UnsupportedTemplate("template for " + meta.name + " cannot be rendered");

  // Snap the size so the outline's stroke centreline (half-size minus
  // half-width) sits on the pixel grid; with the offset below that keeps
  // every stroke tie-free and symmetric.
  const double half = stroke_half_width(scale);
  const double size = 2 * (half + std::round(0.5 * t.nominal_size * scale - half));
  const detail::TemplateShape shape{t.primitive, size, half};
  const double theta = (rotation_step - 1) * std::numbers::pi / 4.0;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double ex = shape.extent_x();
  const double ey = shape.extent_y();
  const double half_w = std::abs(ex * c) + std::abs(ey * s);
  const double half_h = std::abs(ex * s) + std::abs(ey * c);
  const int w = 2 * (static_cast<int>(std::ceil(half_w)) + kRenderMargin);
  const int h = 2 * (static_cast<int>(std::ceil(half_h)) + kRenderMargin);

  GrayImage img(w, h, 255);
  // Odd stroke widths centre on a pixel centre, even ones on a pixel corner:
  // then no stroke edge passes through a pixel centre, each stroke covers
  // exactly its width, and the grid stays mirror-symmetric (both diagonals
  // rasterize alike).
  const double offset = static_cast<long>(2 * shape.half) % 2 ? 0.5 : 0.0;
  const double cx = 0.5 * w + offset;
  const double cy = 0.5 * h + offset;
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) {
      const double px = i + 0.5 - cx;
      const double py = j + 0.5 - cy;
      // Screen-counterclockwise rotation, inverted to sample the local frame.
      const double lx = px * c - py * s;
      const double ly = px * s + py * c;
      if (shape.ink(lx, ly)) img.at(i, j) = 0;
    }
  }
  return img;
}

// Darkest-wins paste of src into dst with src's top-left at (x, y); parts
// outside dst are clipped.
inline void composite(GrayImage& dst, const GrayImage& src, int x, int y) noexcept {
  for (int j = 0; j < src.height(); ++j) {
    for (int i = 0; i < src.width(); ++i) {
      const int dx = x + i;
      const int dy = y + j;
      if (!dst.in_bounds(dx, dy)) continue;
      dst.at(dx, dy) = std::min(dst.at(dx, dy), src.at(i, j));
    }
  }
}

}  // namespace swogr
