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
#include <random>

#include <gtest/gtest.h>

#include "raster_support.hpp"
#include "support/oracles.hpp"
#include "swogr/components.hpp"

using testing_raster::parse_bits;

TEST(Components, SinglePixel) {
  const auto comps = swogr::connected_components(parse_bits({"...", ".#.", "..."}), 8);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].area, 1);
  EXPECT_EQ(comps[0].hole_count, 0);
  EXPECT_EQ(comps[0].boundary.size(), 1u);
  EXPECT_EQ(comps[0].bbox, (swogr::BBox{1, 1, 1, 1}));
}

TEST(Components, DiagonalNeighbours) {
  const auto bin = parse_bits({"#.", ".#"});
  EXPECT_EQ(swogr::connected_components(bin, 8).size(), 1u);
  EXPECT_EQ(swogr::connected_components(bin, 4).size(), 2u);
}

TEST(Components, LabelsInRasterOrderOfFirstPixel) {
  const auto comps = swogr::connected_components(parse_bits({"...#", "#..#", "#...", "..##"}), 8);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0].bbox.x, 3);
  EXPECT_EQ(comps[1].bbox.x, 0);
  EXPECT_EQ(comps[2].bbox.y, 3);
  for (std::size_t i = 0; i < comps.size(); ++i) EXPECT_EQ(comps[i].label, static_cast<int>(i) + 1);
}

TEST(Components, UShapeMergesAcrossRows) {
  const auto comps = swogr::connected_components(parse_bits({"#...#", "#...#", "#####"}), 4);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].area, 9);
  EXPECT_EQ(comps[0].hole_count, 0);
}

TEST(Components, RingHasOneHole) {
  const auto comps = swogr::connected_components(parse_bits({"#####", "#...#", "#...#", "#####"}), 8);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].hole_count, 1);
  EXPECT_EQ(comps[0].filled_area, 20);
}

TEST(Components, HolesUseFourConnectedBackground) {
  // The two single-pixel gaps touch only diagonally: two holes.
  const auto c = swogr::connected_components(parse_bits({"####", "#.##", "##.#", "####"}), 8);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].hole_count, 2);
  // A diagonal gap in the wall does not let background leak in (4-connected).
  const auto d = swogr::connected_components(parse_bits({".###", "#..#", "#..#", "####"}), 8);
  EXPECT_EQ(d[0].hole_count, 1);
}

TEST(Components, MinHoleAreaIgnoresSpecks) {
  const auto bin = parse_bits({"#######", "#.#...#", "###...#", "#######"});
  EXPECT_EQ(swogr::connected_components(bin, {8, 1})[0].hole_count, 2);
  EXPECT_EQ(swogr::connected_components(bin, {8, 4})[0].hole_count, 1);
  EXPECT_EQ(swogr::connected_components(bin, {8, 4})[0].filled_area, 28);
}

TEST(Components, NestedComponentIsSeparate) {
  const auto comps = swogr::connected_components(parse_bits({"#####", "#...#", "#.#.#", "#...#", "#####"}), 8);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].hole_count, 1);
  EXPECT_EQ(comps[1].area, 1);
}

TEST(Boundary, FilledSquareHasEightBoundaryPixels) {
  const auto comps = swogr::connected_components(parse_bits({"###", "###", "###"}), 8);
  ASSERT_EQ(comps[0].boundary.size(), 8u);
  EXPECT_EQ(comps[0].boundary.front(), (swogr::Point{0, 0}));
  // clockwise in image coordinates (y down): east first
  EXPECT_EQ(comps[0].boundary[1], (swogr::Point{1, 0}));
  EXPECT_DOUBLE_EQ(comps[0].perimeter, 8.0);
}

TEST(Boundary, DiagonalStepsCountRootTwo) {
  const auto comps = swogr::connected_components(parse_bits({"#..", ".#.", "..#"}), 8);
  ASSERT_EQ(comps.size(), 1u);
  // there and back along the diagonal
  EXPECT_NEAR(comps[0].perimeter, 4 * std::sqrt(2.0), 1e-12);
}

TEST(Boundary, RandomBlobsHaveValidContours) {
  std::mt19937 rng(51);
  for (int i = 0; i < 200; ++i) {
    swogr::BinaryImage bin(24, 24);
    std::bernoulli_distribution ink(0.55);
    for (int y = 0; y < 24; ++y)
      for (int x = 0; x < 24; ++x) bin.set(x, y, ink(rng));
    for (const auto& c : swogr::connected_components(bin, 8)) {
      ASSERT_FALSE(c.boundary.empty());
      const auto first = *std::min_element(c.pixels.begin(), c.pixels.end(), [](auto a, auto b) {
        return std::tie(a.y, a.x) < std::tie(b.y, b.x);
      });
      EXPECT_EQ(c.boundary.front(), first);
      std::set<std::pair<int, int>> members;
      for (auto p : c.pixels) members.insert({p.x, p.y});
      for (std::size_t k = 0; k < c.boundary.size(); ++k) {
        const auto p = c.boundary[k];
        ASSERT_TRUE(members.count({p.x, p.y}));
        bool touches_bg = false;
        for (int dy = -1; dy <= 1; ++dy)
          for (int dx = -1; dx <= 1; ++dx)
            if ((dx || dy) && !bin.get(p.x + dx, p.y + dy)) touches_bg = true;
        EXPECT_TRUE(touches_bg);
        const auto q = c.boundary[(k + 1) % c.boundary.size()];
        if (c.boundary.size() > 1) {
          EXPECT_LE(std::abs(p.x - q.x), 1);
          EXPECT_LE(std::abs(p.y - q.y), 1);
          EXPECT_FALSE(p == q);
        }
      }
    }
  }
}

TEST(Components, MatchesFloodFillOracle) {
  std::mt19937 rng(52);
  for (int i = 0; i < 200; ++i) {
    const int w = 1 + static_cast<int>(rng() % 50), h = 1 + static_cast<int>(rng() % 50);
    swogr::BinaryImage bin(w, h);
    std::bernoulli_distribution ink(0.1 + 0.8 * (rng() % 100) / 100.0);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) bin.set(x, y, ink(rng));
    for (int conn : {4, 8}) {
      const auto comps = swogr::connected_components(bin, conn);
      std::vector<int> labels(static_cast<std::size_t>(w * h), 0);
      long long total = 0;
      for (const auto& c : comps) {
        total += c.area;
        EXPECT_EQ(c.area, static_cast<long long>(c.pixels.size()));
        for (auto p : c.pixels) {
          EXPECT_EQ(labels[p.y * w + p.x], 0) << "pixel in two components";
          labels[p.y * w + p.x] = c.label;
          EXPECT_TRUE(c.bbox.contains(swogr::BBox{p.x, p.y, 1, 1}));
        }
      }
      EXPECT_EQ(total, static_cast<long long>(bin.count()));
      ASSERT_TRUE(oracle::same_partition(labels, oracle::flood_fill_labels(bin, conn)));
      // Label order: oracle labels are also raster-ordered, so equal outright.
      ASSERT_EQ(labels, oracle::flood_fill_labels(bin, conn));
    }
  }
}

TEST(Components, RejectsBadConnectivity) {
  EXPECT_THROW(swogr::connected_components(swogr::BinaryImage(2, 2), 6), swogr::Error);
}
