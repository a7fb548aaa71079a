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

// The rule cascade that turns a component's shape descriptors into an ISWA
// code. Rules are tried in ascending priority; the first match wins.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "swogr/components.hpp"
#include "swogr/config.hpp"
#include "swogr/error.hpp"
#include "swogr/features.hpp"
#include "swogr/iswa.hpp"

namespace swogr {

// Codes produced by the default cascade (rotation 01 where the rule sets it).
namespace codes {
inline constexpr IswaCode kIndex{1, 1, 1, 1, 1, 1};
inline constexpr IswaCode kFist{1, 10, 1, 1, 1, 1};
inline constexpr IswaCode kTouch{2, 1, 1, 1, 1, 1};
inline constexpr IswaCode kBrush{2, 1, 2, 1, 2, 1};
inline constexpr IswaCode kStraightMovement{2, 5, 1, 1, 1, 1};
inline constexpr IswaCode kHead{4, 1, 1, 1, 1, 1};
}  // namespace codes

inline constexpr int kFillOutline = 1;
inline constexpr int kFillFilled = 2;

// A component together with its descriptors, as seen by the rules.
struct Shape {
  const Component& component;
  const FeatureVector& features;
};

struct ClassifierRule {
  std::string name;
  int priority = 0;
  // Confidence in [0.5, 1] on match, nullopt otherwise.
  std::function<std::optional<double>(const Shape&)> predicate;
  // Completes the code from the shape; nullopt vetoes the match.
  std::function<std::optional<IswaCode>(const Shape&)> code_builder;
};

using Cascade = std::vector<ClassifierRule>;

struct GlyphCandidate {
  IswaCode code;
  double confidence = 0.0;
  std::string rule;
};

// Score for one threshold test: 0.5 at the threshold, rising linearly to 1
// once the value clears it by 10% of the threshold.
inline double margin_score(double value, double threshold, bool at_least) noexcept {
  const double margin = at_least ? value - threshold : threshold - value;
  const double scale = 0.1 * std::max(std::abs(threshold), 1e-9);
  return 0.5 + 0.5 * std::clamp(margin / scale, 0.0, 1.0);
}

// Which end of the oriented principal axis an arrow points to. forward is
// the direction orientation_deg names (counterclockwise from up).
enum class AxisEnd { forward, backward };

// ISWA rotation digit: 45-degree steps counterclockwise from up. Undirected
// axes fold onto digits 1..4. Exact half-steps round to the lower step.
inline int rotation_octant(double orientation_deg, std::optional<AxisEnd> tip = std::nullopt) noexcept {
  double angle = orientation_deg;
  if (tip && *tip == AxisEnd::backward) angle += 180.0;
  const int step = static_cast<int>(std::ceil(angle / 45.0 - 0.5));
  const int modulus = tip ? 8 : 4;
  return ((step % modulus) + modulus) % modulus + 1;
}

inline bool is_head(const FeatureVector& fv, const RecognizerConfig& cfg) noexcept {
  return fv.hole_count == 1 && fv.circularity >= cfg.tau_circ && fv.aspect_ratio <= cfg.max_round_aspect;
}

// Head symbols: a single closed round outline.
inline std::optional<IswaCode> detect_head(const FeatureVector& fv, const RecognizerConfig& cfg = {}) {
  if (!is_head(fv, cfg)) return std::nullopt;
  IswaCode code = codes::kHead;
  code.fill = kFillOutline;
  return code;
}

struct WidthProfile {
  std::vector<double> widths;  // ink per unit length along the principal axis
  double median = 0.0;
  double forward_peak = 0.0;   // max width in the forward end region
  double backward_peak = 0.0;
};

namespace detail {
inline constexpr double kProfileBin = 2.0;
inline constexpr double kEndFraction = 0.35;
}  // namespace detail

// Pixel count per 2-px slice along the principal axis. End regions are the
// outer 35% of slices on each side.
inline WidthProfile width_profile(const Component& comp, double orientation_deg) {
  const double rad = orientation_deg * std::numbers::pi / 180.0;
  const double ux = -std::sin(rad);
  const double uy = -std::cos(rad);
  std::vector<double> t(comp.pixels.size());
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < comp.pixels.size(); ++i) {
    const double dx = comp.pixels[i].x - comp.centroid.x;
    const double dy = comp.pixels[i].y - comp.centroid.y;
    t[i] = dx * ux + dy * uy;
    if (i == 0 || t[i] < lo) lo = t[i];
    if (i == 0 || t[i] > hi) hi = t[i];
  }
  WidthProfile p;
  const std::size_t bins = static_cast<std::size_t>((hi - lo) / detail::kProfileBin) + 1;
  p.widths.assign(bins, 0.0);
  for (double v : t) {
    const auto b = std::min(bins - 1, static_cast<std::size_t>((v - lo) / detail::kProfileBin));
    p.widths[b] += 1.0 / detail::kProfileBin;
  }
  std::vector<double> sorted = p.widths;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
  p.median = sorted[sorted.size() / 2];
  const std::size_t end = std::max<std::size_t>(1, static_cast<std::size_t>(bins * detail::kEndFraction));
  for (std::size_t i = 0; i < bins; ++i) {
    if (i < end) p.backward_peak = std::max(p.backward_peak, p.widths[i]);
    if (i + end >= bins) p.forward_peak = std::max(p.forward_peak, p.widths[i]);
  }
  return p;
}

struct ArrowDetection {
  IswaCode code;
  AxisEnd tip = AxisEnd::forward;
  double head_ratio = 0.0;  // peak width over median shaft width
};

inline std::optional<ArrowDetection> detect_arrow_detail(const Component& comp, const FeatureVector& fv,
                                                         const RecognizerConfig& cfg = {}) {
  if (fv.elongation < cfg.tau_elong) return std::nullopt;
  const WidthProfile p = width_profile(comp, fv.orientation_deg);
  if (p.median <= 0) return std::nullopt;
  const double need = cfg.arrow_head_ratio * p.median;
  const bool fwd = p.forward_peak > need;
  const bool bwd = p.backward_peak > need;
  if (fwd == bwd) return std::nullopt;  // no unique arrowhead
  ArrowDetection d;
  d.tip = fwd ? AxisEnd::forward : AxisEnd::backward;
  d.head_ratio = (fwd ? p.forward_peak : p.backward_peak) / p.median;
  d.code = codes::kStraightMovement;
  d.code.rotation = rotation_octant(fv.orientation_deg, d.tip);
  return d;
}

// Straight movement arrows: elongated, with a single arrowhead width peak
// at one end of the principal axis.
inline std::optional<IswaCode> detect_arrow(const Component& comp, const FeatureVector& fv,
                                            const RecognizerConfig& cfg = {}) {
  if (auto d = detect_arrow_detail(comp, fv, cfg)) return d->code;
  return std::nullopt;
}

inline Cascade default_cascade(const RecognizerConfig& cfg = {}) {
  auto fixed = [](IswaCode code) {
    return [code](const Shape&) -> std::optional<IswaCode> { return code; };
  };
  Cascade rules;

  rules.push_back({"head", 10,
                   [cfg](const Shape& s) -> std::optional<double> {
                     const auto& f = s.features;
                     if (!is_head(f, cfg)) return std::nullopt;
                     return std::min(margin_score(f.circularity, cfg.tau_circ, true),
                                     margin_score(f.aspect_ratio, cfg.max_round_aspect, false));
                   },
                   [cfg](const Shape& s) { return detect_head(s.features, cfg); }});

  rules.push_back({"brush", 20,
                   [cfg](const Shape& s) -> std::optional<double> {
                     const auto& f = s.features;
                     if (f.hole_count != 0 || f.circularity < cfg.tau_circ ||
                         f.aspect_ratio > cfg.max_round_aspect || f.fill_ratio < cfg.tau_fill)
                       return std::nullopt;
                     return std::min({margin_score(f.circularity, cfg.tau_circ, true),
                                      margin_score(f.aspect_ratio, cfg.max_round_aspect, false),
                                      margin_score(f.fill_ratio, cfg.tau_fill, true)});
                   },
                   fixed(codes::kBrush)});

  rules.push_back({"straight_movement", 30,
                   [cfg](const Shape& s) -> std::optional<double> {
                     const auto& f = s.features;
                     if (f.hole_count != 0) return std::nullopt;
                     const auto d = detect_arrow_detail(s.component, f, cfg);
                     if (!d) return std::nullopt;
                     return std::min(margin_score(f.elongation, cfg.tau_elong, true),
                                     margin_score(d->head_ratio, cfg.arrow_head_ratio, true));
                   },
                   [cfg](const Shape& s) { return detect_arrow(s.component, s.features, cfg); }});

  rules.push_back({"fist", 40,
                   [cfg](const Shape& s) -> std::optional<double> {
                     const auto& f = s.features;
                     if (f.hole_count > 1 || f.circularity >= cfg.tau_circ ||
                         f.aspect_ratio > cfg.max_round_aspect || f.outer_extent() < cfg.tau_extent_square ||
                         f.elongation >= cfg.tau_elong)
                       return std::nullopt;
                     return std::min({margin_score(f.circularity, cfg.tau_circ, false),
                                      margin_score(f.aspect_ratio, cfg.max_round_aspect, false),
                                      margin_score(f.outer_extent(), cfg.tau_extent_square, true),
                                      margin_score(f.elongation, cfg.tau_elong, false)});
                   },
                   [cfg](const Shape& s) -> std::optional<IswaCode> {
                     IswaCode code = codes::kFist;
                     code.fill = s.features.fill_ratio >= cfg.tau_fill ? kFillFilled : kFillOutline;
                     return code;
                   }});

  rules.push_back({"index", 50,
                   [cfg](const Shape& s) -> std::optional<double> {
                     const auto& f = s.features;
                     if (f.hole_count != 1 || f.aspect_ratio <= cfg.max_round_aspect ||
                         f.aspect_ratio > cfg.max_index_aspect || f.fill_ratio >= cfg.tau_fill ||
                         f.elongation >= cfg.tau_elong)
                       return std::nullopt;
                     return std::min({margin_score(f.aspect_ratio, cfg.max_round_aspect, true),
                                      margin_score(f.aspect_ratio, cfg.max_index_aspect, false),
                                      margin_score(f.fill_ratio, cfg.tau_fill, false),
                                      margin_score(f.elongation, cfg.tau_elong, false)});
                   },
                   fixed(codes::kIndex)});

  rules.push_back({"touch", 60,
                   [cfg](const Shape& s) -> std::optional<double> {
                     const auto& f = s.features;
                     if (f.hole_count != 0 || f.circularity >= cfg.tau_circ ||
                         f.aspect_ratio > cfg.max_round_aspect || f.outer_extent() >= cfg.tau_extent_star ||
                         f.elongation >= cfg.tau_elong)
                       return std::nullopt;
                     return std::min({margin_score(f.circularity, cfg.tau_circ, false),
                                      margin_score(f.aspect_ratio, cfg.max_round_aspect, false),
                                      margin_score(f.outer_extent(), cfg.tau_extent_star, false),
                                      margin_score(f.elongation, cfg.tau_elong, false)});
                   },
                   fixed(codes::kTouch)});
  return rules;
}

inline void validate_cascade(const Cascade& cascade) {
  if (cascade.empty()) throw InvalidCascade("cascade has no rules");
  std::set<int> seen;
  for (const auto& r : cascade) {
    if (!r.predicate || !r.code_builder) throw InvalidCascade("rule '" + r.name + "' is incomplete");
    if (!seen.insert(r.priority).second)
      throw InvalidCascade("duplicate priority " + std::to_string(r.priority) + " (rule '" + r.name + "')");
  }
}

// First matching rule in ascending priority order.
inline std::optional<GlyphCandidate> classify_component(const Shape& shape, const Cascade& cascade) {
  validate_cascade(cascade);
  std::vector<const ClassifierRule*> order;
  for (const auto& r : cascade) order.push_back(&r);
  std::sort(order.begin(), order.end(),
            [](const ClassifierRule* a, const ClassifierRule* b) { return a->priority < b->priority; });
  for (const ClassifierRule* r : order) {
    const auto conf = r->predicate(shape);
    if (!conf) continue;
    const auto code = r->code_builder(shape);
    if (!code) continue;
    return GlyphCandidate{*code, std::clamp(*conf, 0.0, 1.0), r->name};
  }
  return std::nullopt;
}

// Speckle guard first: components under min_area never reach the rules.
inline std::optional<GlyphCandidate> classify_component(const Component& comp, const Cascade& cascade,
                                                        const RecognizerConfig& cfg) {
  if (comp.area < cfg.min_area || comp.area < kSpeckleArea) return std::nullopt;
  const FeatureVector fv = features(comp);
  return classify_component(Shape{comp, fv}, cascade);
}

}  // namespace swogr
