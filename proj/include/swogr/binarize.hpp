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

#include "swogr/image.hpp"

namespace swogr {

struct Binarization {
  BinaryImage image;
  int threshold = 0;  // foreground iff intensity < threshold
};

using Histogram = std::array<std::uint64_t, 256>;

inline Histogram histogram(const GrayImage& img) noexcept {
  Histogram h{};
  for (auto v : img.pixels()) ++h[v];
  return h;
}

namespace detail {

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

// Between-class variance up to the constant factor 1/N^2:
//   (S0*N1 - S1*N0)^2 / (N0*N1)
// kept as numerator/denominator so candidates compare exactly.
struct ClassSplitScore {
  u128 diff = 0;  // |S0*N1 - S1*N0|
  u128 denom = 1;  // N0*N1
};

inline bool fits_exact(const ClassSplitScore& s) noexcept {
  // diff^2 * denom must stay below 2^128.
  return s.diff < (static_cast<u128>(1) << 40) &&
         s.denom < (static_cast<u128>(1) << 46);
}

inline bool score_greater(const ClassSplitScore& a, const ClassSplitScore& b) noexcept {
  if (fits_exact(a) && fits_exact(b)) return a.diff * a.diff * b.denom > b.diff * b.diff * a.denom;
  const long double la = static_cast<long double>(a.diff) * static_cast<long double>(a.diff) /
                         static_cast<long double>(a.denom);
  const long double lb = static_cast<long double>(b.diff) * static_cast<long double>(b.diff) /
                         static_cast<long double>(b.denom);
  return la > lb;
}

}  // namespace detail

// Otsu threshold over the full 256-bin histogram. Returns the smallest t in
// [1,255] maximizing between-class variance of {v < t} vs {v >= t}, or 0
// when the image has a single intensity level (no foreground).
inline int otsu_threshold(const Histogram& hist) noexcept {
  std::uint64_t total_n = 0;
  detail::u128 total_s = 0;
  for (int v = 0; v < 256; ++v) {
    total_n += hist[v];
    total_s += static_cast<detail::u128>(hist[v]) * static_cast<unsigned>(v);
  }

  int best_t = 0;
  detail::ClassSplitScore best{};
  std::uint64_t n0 = 0;
  detail::u128 s0 = 0;
  for (int t = 1; t < 256; ++t) {
    n0 += hist[t - 1];
    s0 += static_cast<detail::u128>(hist[t - 1]) * static_cast<unsigned>(t - 1);
    const std::uint64_t n1 = total_n - n0;
    if (n0 == 0 || n1 == 0) continue;
    const detail::u128 s1 = total_s - s0;
    const detail::u128 a = s0 * n1;
    const detail::u128 b = s1 * n0;
    detail::ClassSplitScore score{a > b ? a - b : b - a,
                                  static_cast<detail::u128>(n0) * n1};
    if (score.diff == 0) continue;
    if (best_t == 0 || detail::score_greater(score, best)) {
      best = score;
      best_t = t;
    }
  }
  return best_t;
}

inline BinaryImage threshold_image(const GrayImage& img, int threshold) {
  BinaryImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) out.set(x, y, img.at(x, y) < threshold);
  return out;
}

inline Binarization binarize_otsu(const GrayImage& img) {
  const int t = otsu_threshold(histogram(img));
  return {threshold_image(img, t), t};
}

}  // namespace swogr
