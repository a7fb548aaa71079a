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
#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "swogr/embed.hpp"
#include "swogr/image_io.hpp"

namespace {

swogr::Rgb px(const swogr::RgbImage& img, int x, int y) { return img.at(x, y); }

bool same(swogr::Rgb a, swogr::Rgb b) { return a.r == b.r && a.g == b.g && a.b == b.b; }

int pixels_of(const swogr::RgbImage& img, swogr::Rgb c) {
  int n = 0;
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) n += same(img.at(x, y), c);
  return n;
}

}  // namespace

TEST(Embed, EmptyOutcomeIsPlainCopy) {
  swogr::GrayImage img(30, 20, 255);
  img.at(3, 4) = 17;
  const auto out = swogr::recognize_page(swogr::GrayImage(30, 20, 255));
  const auto res = swogr::embed(img, out, "x.png");
  for (int y = 0; y < 20; ++y)
    for (int x = 0; x < 30; ++x) {
      const auto v = img.at(x, y);
      ASSERT_TRUE(same(px(res.image, x, y), {v, v, v}));
    }
  EXPECT_TRUE(res.overlays.empty());
  EXPECT_TRUE(res.swml.signboxes.empty());
}

TEST(Embed, OneGlyphOneLabeledRectangle) {
  const auto& head = swogr::default_catalog().lookup(swogr::codes::kHead);
  const auto page = fixture::compose({{&head, 1}}, 1.0);
  const auto out = swogr::recognize_page(page.image);
  ASSERT_EQ(out.glyphs.size(), 1u);
  const auto res = swogr::embed(page.image, out, "head.png");
  int labeled = 0;
  for (const auto& o : res.overlays) labeled += o.kind == swogr::OverlayKind::glyph && !o.label.empty();
  EXPECT_EQ(labeled, 1);
  EXPECT_EQ(res.overlays.size(), 2u);  // glyph and its sign box
  ASSERT_EQ(res.swml.signboxes.size(), 1u);
  EXPECT_EQ(res.swml.signboxes[0].glyphs.size(), 1u);
  const auto b = out.glyphs[0].bbox;
  EXPECT_TRUE(same(px(res.image, b.x, b.y), swogr::kGlyphColor));
  EXPECT_TRUE(same(px(res.image, b.right() - 1, b.bottom() - 1), swogr::kGlyphColor));
  EXPECT_TRUE(same(px(res.image, b.x - 2, b.y - 2), swogr::kSignBoxColor));
  // label text above the box
  int label_px = 0;
  for (int y = b.y - 6; y < b.y - 1; ++y)
    for (int x = b.x; x < b.x + 72; ++x) label_px += res.image.in_bounds(x, y) && same(px(res.image, x, y), swogr::kGlyphColor);
  EXPECT_GT(label_px, 30);
}

TEST(Embed, RectangleCountMatchesOutcome) {
  std::mt19937 rng(91);
  const auto variants = fixture::all_variants();
  fixture::Layout lay;
  lay.per_sign = 3;
  auto page = fixture::compose(variants, 1.0, lay);
  // an unrecognizable blob
  for (int y = 5; y < 25; ++y)
    for (int x = 5; x < 8; ++x) page.image.at(x, y) = 0;
  const auto out = swogr::recognize_page(page.image);
  ASSERT_FALSE(out.unrecognized.empty());
  const auto res = swogr::embed(page.image, out, "p.png");
  EXPECT_EQ(res.overlays.size(), out.glyphs.size() + out.unrecognized.size() + out.signboxes.size());
  const auto u = out.unrecognized[0];
  EXPECT_TRUE(same(px(res.image, u.x, u.y), swogr::kUnrecognizedColor));
}

TEST(Embed, SwmlEqualsDirectSerialization) {
  const auto page = fixture::compose(fixture::all_variants(), 1.0);
  const auto out = swogr::recognize_page(page.image);
  EXPECT_EQ(swogr::swml_serialize(swogr::embed(page.image, out, "p.png").swml),
            swogr::swml_serialize(swogr::to_document(out, "p.png")));
}

TEST(Embed, PixelsOutsideOverlaysUntouched) {
  const auto page = fixture::compose(fixture::all_variants(), 1.0);
  const auto out = swogr::recognize_page(page.image);
  const auto res = swogr::embed(page.image, out, "p.png");
  int changed = 0;
  for (int y = 0; y < page.image.height(); ++y)
    for (int x = 0; x < page.image.width(); ++x) {
      const auto v = page.image.at(x, y);
      if (!same(res.image.at(x, y), {v, v, v})) {
        ++changed;
        const auto c = res.image.at(x, y);
        ASSERT_TRUE(same(c, swogr::kGlyphColor) || same(c, swogr::kSignBoxColor) ||
                    same(c, swogr::kUnrecognizedColor));
      }
    }
  EXPECT_EQ(changed, pixels_of(res.image, swogr::kGlyphColor) + pixels_of(res.image, swogr::kSignBoxColor) +
                         pixels_of(res.image, swogr::kUnrecognizedColor));
}

TEST(Embed, Deterministic) {
  const auto page = fixture::compose(fixture::all_variants(), 1.0);
  const auto out = swogr::recognize_page(page.image);
  EXPECT_EQ(swogr::encode_png(swogr::embed(page.image, out).image), swogr::encode_png(swogr::embed(page.image, out).image));
}

TEST(Embed, DimensionMismatch) {
  const auto page = fixture::compose(fixture::all_variants(), 1.0);
  const auto out = swogr::recognize_page(page.image);
  EXPECT_THROW(swogr::embed(swogr::GrayImage(50, 50), out), swogr::DimensionMismatch);
  auto bad = out;
  bad.unrecognized.push_back({page.image.width() - 2, 0, 5, 5});
  EXPECT_THROW(swogr::embed(page.image, bad), swogr::DimensionMismatch);
}
