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

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "swogr/error.hpp"
#include "swogr/geometry.hpp"
#include "swogr/image.hpp"

namespace swogr {

using Contour = std::vector<Point>;

// A maximal connected set of foreground pixels.
struct Component {
  int label = 0;
  long long area = 0;
  BBox bbox;
  double perimeter = 0.0;  // boundary step length, diagonal steps count sqrt(2)
  PointF centroid;
  int hole_count = 0;
  long long filled_area = 0;  // area plus every enclosed background pixel
  Contour boundary;           // clockwise Moore trace from the top-left-most pixel
  std::vector<Point> pixels;  // raster order
};

struct ComponentOptions {
  int connectivity = 8;
  // Enclosed background regions smaller than this are not counted as holes
  // (they still count toward filled_area).
  int min_hole_area = 1;
};

// Label map: 0 = background, components numbered from 1 in raster order of
// their first pixel.
struct LabelMap {
  int width = 0;
  int height = 0;
  std::vector<std::int32_t> labels;
  int count = 0;

  std::int32_t at(int x, int y) const noexcept {
    return labels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(x)];
  }
  std::int32_t get(int x, int y) const noexcept {
    return (x < 0 || y < 0 || x >= width || y >= height) ? 0 : at(x, y);
  }
};

namespace detail {

// Clockwise on screen (y down), starting east.
inline constexpr std::array<Point, 8> kRing{{{1, 0}, {1, 1}, {0, 1}, {-1, 1},
                                             {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};

inline int ring_index(int dx, int dy) noexcept {
  for (int i = 0; i < 8; ++i)
    if (kRing[i].x == dx && kRing[i].y == dy) return i;
  return -1;
}

inline int find_root(std::vector<std::int32_t>& parent, std::int32_t x) noexcept {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace detail

// Two-pass union-find labeling.
inline LabelMap label_components(const BinaryImage& bin, int connectivity = 8) {
  if (connectivity != 4 && connectivity != 8) throw Error("connectivity must be 4 or 8");
  const int w = bin.width();
  const int h = bin.height();
  LabelMap map{w, h, std::vector<std::int32_t>(static_cast<std::size_t>(w) * h, 0), 0};
  std::vector<std::int32_t> parent{0};

  auto idx = [w](int x, int y) { return static_cast<std::size_t>(y) * w + x; };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!bin.at(x, y)) continue;
      std::array<std::int32_t, 4> nb{};
      int n = 0;
      if (x > 0 && map.labels[idx(x - 1, y)]) nb[n++] = map.labels[idx(x - 1, y)];
      if (y > 0 && map.labels[idx(x, y - 1)]) nb[n++] = map.labels[idx(x, y - 1)];
      if (connectivity == 8 && y > 0) {
        if (x > 0 && map.labels[idx(x - 1, y - 1)]) nb[n++] = map.labels[idx(x - 1, y - 1)];
        if (x + 1 < w && map.labels[idx(x + 1, y - 1)]) nb[n++] = map.labels[idx(x + 1, y - 1)];
      }
      if (n == 0) {
        const auto fresh = static_cast<std::int32_t>(parent.size());
        parent.push_back(fresh);
        map.labels[idx(x, y)] = fresh;
        continue;
      }
      std::int32_t root = detail::find_root(parent, nb[0]);
      for (int i = 1; i < n; ++i) {
        const std::int32_t r = detail::find_root(parent, nb[i]);
        if (r < root) {
          parent[root] = r;
          root = r;
        } else if (r > root) {
          parent[r] = root;
        }
      }
      map.labels[idx(x, y)] = root;
    }
  }

  std::vector<std::int32_t> remap(parent.size(), 0);
  for (auto& l : map.labels) {
    if (!l) continue;
    const std::int32_t r = detail::find_root(parent, l);
    if (!remap[r]) remap[r] = ++map.count;
    l = remap[r];
  }
  return map;
}

// Moore-neighbour trace of one labeled component, clockwise, starting at
// the component's first pixel in raster order (entered from the west). The
// trace ends when the state after the first move (pixel, backtrack) recurs.
inline Contour trace_boundary(const LabelMap& map, int label, Point start) {
  auto inside = [&](int x, int y) { return map.get(x, y) == label; };
  Contour contour{start};
  Point cur = start;
  Point back{start.x - 1, start.y};
  Point first_cur{};
  Point first_back{};
  const std::size_t max_steps = 8 * static_cast<std::size_t>(map.width) * map.height + 8;

  for (std::size_t step = 0; step < max_steps; ++step) {
    const int bdir = detail::ring_index(back.x - cur.x, back.y - cur.y);
    int found = -1;
    for (int k = 1; k < 8; ++k) {
      const int d = (bdir + k) % 8;
      if (inside(cur.x + detail::kRing[d].x, cur.y + detail::kRing[d].y)) {
        found = d;
        break;
      }
    }
    if (found < 0) break;  // isolated pixel
    const int prev = (found + 7) % 8;
    back = {cur.x + detail::kRing[prev].x, cur.y + detail::kRing[prev].y};
    cur = {cur.x + detail::kRing[found].x, cur.y + detail::kRing[found].y};
    if (step == 0) {
      first_cur = cur;
      first_back = back;
    } else if (cur == first_cur && back == first_back) {
      if (contour.size() > 1 && contour.back() == start) contour.pop_back();
      break;
    }
    contour.push_back(cur);
  }
  return contour;
}

inline double contour_length(const Contour& c) noexcept {
  if (c.size() < 2) return 0.0;
  int axial = 0;
  int diagonal = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Point& a = c[i];
    const Point& b = c[(i + 1) % c.size()];
    if (a.x != b.x && a.y != b.y)
      ++diagonal;
    else if (a != b)
      ++axial;
  }
  return axial + diagonal * 1.4142135623730951;
}

// Twice the signed shoelace area of the closed contour, in coordinates
// relative to origin (exact in integers).
inline long long contour_twice_area(const Contour& c, Point origin = {}) noexcept {
  long long acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Point& a = c[i];
    const Point& b = c[(i + 1) % c.size()];
    acc += static_cast<long long>(a.x - origin.x) * (b.y - origin.y) -
           static_cast<long long>(b.x - origin.x) * (a.y - origin.y);
  }
  return acc;
}

namespace detail {

// Holes of one component: background (w.r.t. this component, 4-connected)
// inside its bbox that cannot reach the padded frame.
inline void measure_holes(Component& comp, int min_hole_area) {
  const int pw = comp.bbox.w + 2;
  const int ph = comp.bbox.h + 2;
  // 0 = unvisited background, 1 = component, 2 = outside, 3 = hole
  std::vector<std::uint8_t> grid(static_cast<std::size_t>(pw) * ph, 0);
  auto g = [&](int x, int y) -> std::uint8_t& { return grid[static_cast<std::size_t>(y) * pw + x]; };
  for (const Point& p : comp.pixels) g(p.x - comp.bbox.x + 1, p.y - comp.bbox.y + 1) = 1;

  std::vector<Point> stack;
  auto flood = [&](int sx, int sy, std::uint8_t mark) {
    long long n = 0;
    stack.clear();
    stack.push_back({sx, sy});
    g(sx, sy) = mark;
    while (!stack.empty()) {
      const Point p = stack.back();
      stack.pop_back();
      ++n;
      static constexpr std::array<Point, 4> four{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
      for (const Point& d : four) {
        const int nx = p.x + d.x;
        const int ny = p.y + d.y;
        if (nx < 0 || ny < 0 || nx >= pw || ny >= ph || g(nx, ny) != 0) continue;
        g(nx, ny) = mark;
        stack.push_back({nx, ny});
      }
    }
    return n;
  };

  flood(0, 0, 2);
  comp.hole_count = 0;
  comp.filled_area = comp.area;
  for (int y = 1; y < ph - 1; ++y) {
    for (int x = 1; x < pw - 1; ++x) {
      if (g(x, y) != 0) continue;
      const long long n = flood(x, y, 3);
      comp.filled_area += n;
      if (n >= min_hole_area) ++comp.hole_count;
    }
  }
}

}  // namespace detail

// Full component extraction from an existing label map.
inline std::vector<Component> extract_components(const LabelMap& map,
                                                 const ComponentOptions& opts = {}) {
  std::vector<Component> comps(static_cast<std::size_t>(map.count));
  std::vector<long long> sx(comps.size(), 0), sy(comps.size(), 0);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    comps[i].label = static_cast<int>(i) + 1;
    comps[i].bbox = {map.width, map.height, 0, 0};
  }
  std::vector<int> x1(comps.size(), -1), y1(comps.size(), -1);
  for (int y = 0; y < map.height; ++y) {
    for (int x = 0; x < map.width; ++x) {
      const int l = map.at(x, y);
      if (!l) continue;
      Component& c = comps[l - 1];
      c.pixels.push_back({x, y});
      ++c.area;
      sx[l - 1] += x;
      sy[l - 1] += y;
      c.bbox.x = std::min(c.bbox.x, x);
      c.bbox.y = std::min(c.bbox.y, y);
      x1[l - 1] = std::max(x1[l - 1], x);
      y1[l - 1] = std::max(y1[l - 1], y);
    }
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    Component& c = comps[i];
    c.bbox.w = x1[i] - c.bbox.x + 1;
    c.bbox.h = y1[i] - c.bbox.y + 1;
    c.centroid = {static_cast<double>(sx[i]) / static_cast<double>(c.area),
                  static_cast<double>(sy[i]) / static_cast<double>(c.area)};
    c.boundary = trace_boundary(map, c.label, c.pixels.front());
    c.perimeter = contour_length(c.boundary);
    detail::measure_holes(c, opts.min_hole_area);
  }
  return comps;
}

inline std::vector<Component> connected_components(const BinaryImage& bin,
                                                   const ComponentOptions& opts = {}) {
  return extract_components(label_components(bin, opts.connectivity), opts);
}

inline std::vector<Component> connected_components(const BinaryImage& bin, int connectivity) {
  return connected_components(bin, ComponentOptions{connectivity, 1});
}

}  // namespace swogr
