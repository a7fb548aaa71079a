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

// Glyph-level comparison of a predicted document against a gold one.

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <fmt/format.h>

#include "swogr/geometry.hpp"
#include "swogr/swml.hpp"

namespace swogr {

inline constexpr double kMatchIou = 0.5;

struct CategoryCounts {
  int true_positives = 0;
  int false_positives = 0;
  int false_negatives = 0;
  bool operator==(const CategoryCounts&) const = default;
};

struct EvalReport {
  int true_positives = 0;
  int false_positives = 0;
  int false_negatives = 0;
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 1.0;
  std::map<int, CategoryCounts> per_category;
};

struct PageGlyph {
  IswaCode code;
  BBox bbox;  // page frame
};

inline std::vector<PageGlyph> page_glyphs(const SwmlDocument& doc) {
  std::vector<PageGlyph> out;
  for (const auto& sb : doc.signboxes)
    for (const auto& g : sb.glyphs) out.push_back({g.code, g.bbox.translated(sb.bbox.x, sb.bbox.y)});
  return out;
}

// precision and recall treat 0/0 as 1.
inline void finish_report(EvalReport& r) {
  const int pred = r.true_positives + r.false_positives;
  const int gold = r.true_positives + r.false_negatives;
  r.precision = pred == 0 ? 1.0 : static_cast<double>(r.true_positives) / pred;
  r.recall = gold == 0 ? 1.0 : static_cast<double>(r.true_positives) / gold;
  r.f1 = r.precision + r.recall > 0 ? 2 * r.precision * r.recall / (r.precision + r.recall) : 0.0;
}

// Greedy pairing: candidate pairs with equal codes and IoU >= 0.5 are taken
// in descending IoU order (ties by gold, then pred index) while both sides
// are free.
inline EvalReport evaluate(const SwmlDocument& gold, const SwmlDocument& pred) {
  const auto g = page_glyphs(gold);
  const auto p = page_glyphs(pred);
  struct Pair {
    double iou;
    std::size_t gi, pi;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (g[i].code != p[j].code) continue;
      const double v = iou(g[i].bbox, p[j].bbox);
      if (v >= kMatchIou) pairs.push_back({v, i, j});
    }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.iou != b.iou) return a.iou > b.iou;
    return std::tie(a.gi, a.pi) < std::tie(b.gi, b.pi);
  });

  std::vector<bool> gold_used(g.size(), false), pred_used(p.size(), false);
  EvalReport r;
  for (const auto& pr : pairs) {
    if (gold_used[pr.gi] || pred_used[pr.pi]) continue;
    gold_used[pr.gi] = pred_used[pr.pi] = true;
    ++r.true_positives;
    ++r.per_category[g[pr.gi].code.category].true_positives;
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!gold_used[i]) {
      ++r.false_negatives;
      ++r.per_category[g[i].code.category].false_negatives;
    }
  for (std::size_t j = 0; j < p.size(); ++j)
    if (!pred_used[j]) {
      ++r.false_positives;
      ++r.per_category[p[j].code.category].false_positives;
    }
  finish_report(r);
  return r;
}

inline std::string format_eval_line(const EvalReport& r) {
  return fmt::format("EVAL\ttp={}\tfp={}\tfn={}\tprecision={:.4f}\trecall={:.4f}\tf1={:.4f}", r.true_positives,
                     r.false_positives, r.false_negatives, r.precision, r.recall, r.f1);
}

inline std::string format_eval_table(const EvalReport& r) {
  std::string out = fmt::format("{:<10} {:>6} {:>6} {:>6} {:>9} {:>7}\n", "category", "tp", "fp", "fn",
                                "precision", "recall");
  for (const auto& [cat, c] : r.per_category) {
    EvalReport sub;
    sub.true_positives = c.true_positives;
    sub.false_positives = c.false_positives;
    sub.false_negatives = c.false_negatives;
    finish_report(sub);
    out += fmt::format("{:<10} {:>6} {:>6} {:>6} {:>9.4f} {:>7.4f}\n", fmt::format("{:02d}", cat),
                       c.true_positives, c.false_positives, c.false_negatives, sub.precision, sub.recall);
  }
  out += fmt::format("{:<10} {:>6} {:>6} {:>6} {:>9.4f} {:>7.4f}\n", "all", r.true_positives, r.false_positives,
                     r.false_negatives, r.precision, r.recall);
  out += fmt::format("f1 {:.4f}\n", r.f1);
  return out;
}

}  // namespace swogr
