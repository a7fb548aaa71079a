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

// Page recognition: binarize, label, describe, classify, segment.

#include <chrono>
#include <string>
#include <vector>

#include "swogr/binarize.hpp"
#include "swogr/catalog.hpp"
#include "swogr/components.hpp"
#include "swogr/config.hpp"
#include "swogr/features.hpp"
#include "swogr/image.hpp"
#include "swogr/rules.hpp"
#include "swogr/segment.hpp"
#include "swogr/swml.hpp"

namespace swogr {

struct StageTiming {
  std::string stage;
  double ms = 0.0;
};

struct Timing {
  double total_ms = 0.0;
  std::vector<StageTiming> stages;
};

struct RecognitionOutcome {
  int width = 0;
  int height = 0;
  std::vector<Glyph> glyphs;        // page frame, raster order of components
  std::vector<BBox> unrecognized;   // page frame
  std::vector<SignBox> signboxes;
  int threshold = 0;
  Timing timing;

  // Everything except timing.
  bool same_result(const RecognitionOutcome& o) const {
    return width == o.width && height == o.height && glyphs == o.glyphs &&
           unrecognized == o.unrecognized && signboxes == o.signboxes && threshold == o.threshold;
  }
};

namespace detail {

class StageClock {
 public:
  explicit StageClock(Timing& t) : timing_(t), start_(Clock::now()), mark_(start_) {}
  void lap(const char* stage) {
    const auto now = Clock::now();
    timing_.stages.push_back({stage, ms(mark_, now)});
    mark_ = now;
  }
  void finish() { timing_.total_ms = ms(start_, Clock::now()); }

 private:
  using Clock = std::chrono::steady_clock;
  static double ms(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  }
  Timing& timing_;
  Clock::time_point start_;
  Clock::time_point mark_;
};

}  // namespace detail

inline RecognitionOutcome recognize_page(const GrayImage& img, const SymbolCatalog& catalog,
                                         const RecognizerConfig& cfg, const Cascade& cascade) {
  validate(cfg);
  validate_cascade(cascade);
  RecognitionOutcome out;
  out.width = img.width();
  out.height = img.height();
  detail::StageClock clock(out.timing);

  const Binarization bin = binarize_otsu(img);
  out.threshold = bin.threshold;
  clock.lap("binarize");

  const auto comps = connected_components(bin.image, ComponentOptions{8, cfg.min_hole_area});
  clock.lap("components");

  for (const Component& c : comps) {
    if (c.area < cfg.min_area) continue;
    const auto cand = classify_component(c, cascade, cfg);
    if (cand && catalog.contains(cand->code)) {
      out.glyphs.push_back({cand->code, c.bbox, quantize_confidence(cand->confidence)});
    } else {
      out.unrecognized.push_back(c.bbox);
    }
  }
  clock.lap("classify");

  out.signboxes = segment_signs(out.glyphs, out.width, out.height, cfg);
  clock.lap("segment");
  clock.finish();
  return out;
}

inline RecognitionOutcome recognize_page(const GrayImage& img, const SymbolCatalog& catalog = default_catalog(),
                                         const RecognizerConfig& cfg = {}) {
  return recognize_page(img, catalog, cfg, default_cascade(cfg));
}

inline SwmlDocument to_document(const RecognitionOutcome& outcome, std::string image_name) {
  SwmlDocument doc;
  doc.source = {std::move(image_name), outcome.width, outcome.height};
  doc.signboxes = outcome.signboxes;
  doc.unrecognized = outcome.unrecognized;
  return doc;
}

}  // namespace swogr
