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
#include <compare>

namespace swogr {

// Axis-aligned pixel rectangle, origin top-left, y down. Covers columns
// [x, x + w) and rows [y, y + h).
struct BBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  int right() const noexcept { return x + w; }
  int bottom() const noexcept { return y + h; }
  long long area() const noexcept { return static_cast<long long>(w) * h; }
  bool empty() const noexcept { return w <= 0 || h <= 0; }

  bool contains(const BBox& o) const noexcept {
    return o.x >= x && o.y >= y && o.right() <= right() && o.bottom() <= bottom();
  }
  bool inside(int width, int height) const noexcept {
    return x >= 0 && y >= 0 && right() <= width && bottom() <= height;
  }
  BBox translated(int dx, int dy) const noexcept { return {x + dx, y + dy, w, h}; }

  auto operator<=>(const BBox&) const = default;
};

inline BBox unite(const BBox& a, const BBox& b) noexcept {
  const int x0 = std::min(a.x, b.x);
  const int y0 = std::min(a.y, b.y);
  const int x1 = std::max(a.right(), b.right());
  const int y1 = std::max(a.bottom(), b.bottom());
  return {x0, y0, x1 - x0, y1 - y0};
}

inline long long intersection_area(const BBox& a, const BBox& b) noexcept {
  const int w = std::min(a.right(), b.right()) - std::max(a.x, b.x);
  const int h = std::min(a.bottom(), b.bottom()) - std::max(a.y, b.y);
  if (w <= 0 || h <= 0) return 0;
  return static_cast<long long>(w) * h;
}

inline double iou(const BBox& a, const BBox& b) noexcept {
  const long long inter = intersection_area(a, b);
  const long long uni = a.area() + b.area() - inter;
  return uni > 0 ? static_cast<double>(inter) / static_cast<double>(uni) : 0.0;
}

struct Point {
  int x = 0;
  int y = 0;
  auto operator<=>(const Point&) const = default;
};

struct PointF {
  double x = 0.0;
  double y = 0.0;
};

}  // namespace swogr
