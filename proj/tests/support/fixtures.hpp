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

// Synthetic inputs with known answers: composited template pages, noise,
// random codes and random SWML documents.

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <system_error>
#include <vector>

#include "swogr/catalog.hpp"
#include "swogr/engine.hpp"
#include "swogr/render.hpp"
#include "swogr/swml.hpp"

namespace fixture {

struct Variant {
  const swogr::SymbolMeta* meta;
  int rotation;  // 1-based step
  swogr::IswaCode code() const {
    auto c = meta->code;
    c.rotation = rotation;
    return c;
  }
};

// Every catalog entry in every orientation it declares.
inline std::vector<Variant> all_variants(const swogr::SymbolCatalog& catalog = swogr::default_catalog()) {
  std::vector<Variant> out;
  for (const auto* m : catalog.entries())
    for (int r = 1; r <= m->glyph_template.orientation_steps; ++r) out.push_back({m, r});
  return out;
}

struct PlacedGlyph {
  swogr::IswaCode code;
  swogr::BBox bbox;  // tight ink box, page frame
};

struct Page {
  swogr::GrayImage image;
  std::vector<PlacedGlyph> gold;
  int signs = 0;
};

inline swogr::BBox ink_box(const swogr::GrayImage& img) {
  int x0 = img.width(), y0 = img.height(), x1 = -1, y1 = -1;
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      if (img.at(x, y) < 128) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
      }
  if (x1 < 0) return {};
  return {x0, y0, x1 - x0 + 1, y1 - y0 + 1};
}

struct Layout {
  int per_sign = 1;      // glyphs stacked per sign
  int inner_gap = 12;    // vertical ink gap inside a sign
  int column_gap = 80;   // horizontal ink gap between signs
  int row_gap = 90;      // vertical ink gap between rows of signs
  int margin = 30;
  int max_width = 1600;
};

// Signs are vertical stacks of glyphs centered on a common axis; signs run
// left to right and wrap into rows.
inline Page compose(const std::vector<Variant>& items, double scale, const Layout& lay = {}) {
  struct Piece {
    swogr::GrayImage img;
    swogr::BBox ink;
    swogr::IswaCode code;
  };
  std::vector<std::vector<Piece>> signs;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i % static_cast<std::size_t>(lay.per_sign) == 0) signs.emplace_back();
    auto img = swogr::render_template(*items[i].meta, scale, items[i].rotation);
    const auto ink = ink_box(img);
    signs.back().push_back({std::move(img), ink, items[i].code()});
  }

  struct Placement {
    int x, y;  // ink origin of each piece
  };
  std::vector<std::vector<Placement>> where(signs.size());
  int cx = lay.margin, cy = lay.margin, row_h = 0, page_w = 1, page_h = 1;
  for (std::size_t s = 0; s < signs.size(); ++s) {
    int w = 0, h = 0;
    for (const auto& p : signs[s]) {
      w = std::max(w, p.ink.w);
      h += p.ink.h;
    }
    h += lay.inner_gap * (static_cast<int>(signs[s].size()) - 1);
    if (cx > lay.margin && cx + w > lay.max_width) {
      cx = lay.margin;
      cy += row_h + lay.row_gap;
      row_h = 0;
    }
    int y = cy;
    for (const auto& p : signs[s]) {
      where[s].push_back({cx + (w - p.ink.w) / 2, y});
      y += p.ink.h + lay.inner_gap;
    }
    page_w = std::max(page_w, cx + w + lay.margin);
    page_h = std::max(page_h, cy + h + lay.margin);
    row_h = std::max(row_h, h);
    cx += w + lay.column_gap;
  }

  Page page{swogr::GrayImage(page_w, page_h, 255), {}, static_cast<int>(signs.size())};
  for (std::size_t s = 0; s < signs.size(); ++s)
    for (std::size_t k = 0; k < signs[s].size(); ++k) {
      const auto& p = signs[s][k];
      const auto at = where[s][k];
      swogr::composite(page.image, p.img, at.x - p.ink.x, at.y - p.ink.y);
      page.gold.push_back({p.code, {at.x, at.y, p.ink.w, p.ink.h}});
    }
  return page;
}

// Flips a fraction 'rate' of pixels: half to black (pepper), half to white.
inline void salt_and_pepper(swogr::GrayImage& img, double rate, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (auto& px : img.pixels()) {
    const double r = u(rng);
    if (r < rate / 2)
      px = 0;
    else if (r < rate)
      px = 255;
  }
}

struct Accuracy {
  int correct = 0;
  int total = 0;
  std::vector<std::string> misses;
  double rate() const { return total == 0 ? 1.0 : static_cast<double>(correct) / total; }
};

// A gold glyph counts as recovered when some recognized glyph has the same
// code and IoU >= 0.5 with it.
inline Accuracy score(const Page& page, const swogr::RecognitionOutcome& out) {
  Accuracy acc;
  for (const auto& g : page.gold) {
    ++acc.total;
    bool ok = false;
    for (const auto& r : out.glyphs)
      if (r.code == g.code && swogr::iou(r.bbox, g.bbox) >= 0.5) ok = true;
    if (ok)
      ++acc.correct;
    else
      acc.misses.push_back(swogr::format_code(g.code));
  }
  return acc;
}

inline swogr::IswaCode random_code(std::mt19937& rng) {
  auto f = [&](int hi) { return std::uniform_int_distribution<int>(1, hi)(rng); };
  return {f(7), f(99), f(999), f(99), f(99), f(99)};
}

inline std::string random_name(std::mt19937& rng) {
  static const std::vector<std::string> parts{"page", "_", "-", "0", "7", "&", "<", ">", "\"", "'", " ",
                                              "\xc3\xa9", "\xe6\x89\x8b", ".png", "scan", "x"};
  std::string s;
  const int n = std::uniform_int_distribution<int>(0, 8)(rng);
  for (int i = 0; i < n; ++i) s += parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)];
  return s;
}

inline swogr::BBox random_box_in(int w, int h, std::mt19937& rng) {
  auto r = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int bw = r(1, w), bh = r(1, h);
  return {r(0, w - bw), r(0, h - bh), bw, bh};
}

inline swogr::SwmlDocument random_document(std::mt19937& rng) {
  auto r = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  swogr::SwmlDocument doc;
  doc.source = {random_name(rng), r(1, 3000), r(1, 3000)};
  const int boxes = r(0, 6);
  for (int b = 1; b <= boxes; ++b) {
    swogr::SignBox sb;
    sb.id = b;
    sb.bbox = random_box_in(doc.source.width, doc.source.height, rng);
    const int glyphs = r(0, 5);
    for (int i = 0; i < glyphs; ++i)
      sb.glyphs.push_back({random_code(rng), random_box_in(sb.bbox.w, sb.bbox.h, rng), r(0, 100) / 100.0});
    doc.signboxes.push_back(std::move(sb));
  }
  const int unrec = r(0, 4);
  for (int i = 0; i < unrec; ++i) doc.unrecognized.push_back(random_box_in(doc.source.width, doc.source.height, rng));
  return doc;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "swogr-test-XXXXXX").string();
    if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
    path_ = tmpl;
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(const std::string& s) const { return path_ / s; }

 private:
  std::filesystem::path path_;
};

}  // namespace fixture
