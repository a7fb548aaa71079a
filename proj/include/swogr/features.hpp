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
#include <cmath>
#include <numbers>

#include "swogr/components.hpp"
#include "swogr/error.hpp"

namespace swogr {

// Components below this many pixels are speckle: only area and bbox are
// meaningful for them.
inline constexpr long long kSpeckleArea = 4;

struct FeatureVector {
  double area = 0.0;
  double perimeter = 0.0;
  // 4*pi*A/P^2 of the outer boundary polygon (A = shoelace area enclosed by
  // the traced contour, P = its step length). 1 for an ideal disk.
  double circularity = 0.0;
  double aspect_ratio = 1.0;  // max(w,h) / min(w,h)
  double extent = 1.0;        // area / (w*h)
  int hole_count = 0;
  double fill_ratio = 1.0;    // area / filled_area
  double elongation = 1.0;    // major / minor principal variance
  double orientation_deg = 0.0;  // principal axis, counterclockwise from "up", [0,180)

  // Filled-shape extent: area enclosed by the outer boundary over bbox area.
  double outer_extent() const noexcept { return fill_ratio > 0 ? extent / fill_ratio : 0.0; }
};

struct PrincipalAxes {
  double major_var = 0.0;
  double minor_var = 0.0;
  double orientation_deg = 0.0;
};

// Second-order central moments of the pixel set. Each pixel is treated as a
// unit square (adds 1/12 per axis), which keeps the minor variance positive.
// Sums run in bbox-relative integers so translation leaves results bitwise
// unchanged.
inline PrincipalAxes principal_axes(const Component& comp) noexcept {
  long long sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (const Point& p : comp.pixels) {
    const long long x = p.x - comp.bbox.x;
    const long long y = p.y - comp.bbox.y;
    sx += x;
    sy += y;
    sxx += x * x;
    syy += y * y;
    sxy += x * y;
  }
  const double n = static_cast<double>(comp.area);
  // n^2 * central moments, exact in integers.
  const double cxx = static_cast<double>(sxx * comp.area - sx * sx);
  const double cyy = static_cast<double>(syy * comp.area - sy * sy);
  const double cxy = static_cast<double>(sxy * comp.area - sx * sy);
  const double mu20 = cxx / (n * n);
  const double mu02 = cyy / (n * n);
  const double mu11 = cxy / (n * n);

  const double mean = 0.5 * (mu20 + mu02);
  const double diff = 0.5 * (mu20 - mu02);
  const double root = std::sqrt(diff * diff + mu11 * mu11);
  PrincipalAxes axes;
  axes.major_var = mean + root + 1.0 / 12.0;
  axes.minor_var = std::max(mean - root, 0.0) + 1.0 / 12.0;

  // Major axis direction in image coordinates (x right, y down).
  const double phi = 0.5 * std::atan2(2.0 * cxy, cxx - cyy);
  const double vx = std::cos(phi);
  const double vy = std::sin(phi);
  double deg = std::atan2(-vx, -vy) * 180.0 / std::numbers::pi;
  deg = std::fmod(deg, 180.0);
  if (deg < 0) deg += 180.0;
  if (deg >= 180.0) deg -= 180.0;
  axes.orientation_deg = deg + 0.0;  // no negative zero
  return axes;
}

inline FeatureVector features(const Component& comp) {
  if (comp.area < kSpeckleArea)
    throw DegenerateComponent("component " + std::to_string(comp.label) + " has area " +
                              std::to_string(comp.area) + " < " + std::to_string(kSpeckleArea));
  FeatureVector fv;
  fv.area = static_cast<double>(comp.area);
  fv.perimeter = comp.perimeter;

  const double enclosed =
      0.5 * static_cast<double>(std::llabs(contour_twice_area(comp.boundary, {comp.bbox.x, comp.bbox.y})));
  fv.circularity = fv.perimeter > 0
                       ? std::min(1.0, 4.0 * std::numbers::pi * enclosed / (fv.perimeter * fv.perimeter))
                       : 0.0;

  const int lo = std::min(comp.bbox.w, comp.bbox.h);
  const int hi = std::max(comp.bbox.w, comp.bbox.h);
  fv.aspect_ratio = static_cast<double>(hi) / static_cast<double>(lo);
  fv.extent = fv.area / static_cast<double>(comp.bbox.area());
  fv.hole_count = comp.hole_count;
  fv.fill_ratio = fv.area / static_cast<double>(comp.filled_area);

  const PrincipalAxes axes = principal_axes(comp);
  fv.elongation = axes.major_var / axes.minor_var;
  fv.orientation_deg = axes.orientation_deg;
  return fv;
}

}  // namespace swogr
