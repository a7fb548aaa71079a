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

// JSON mirror of SWML: same element and attribute names, sign boxes and
// unrecognized boxes as arrays.

#include <json.hpp>

#include "swogr/error.hpp"
#include "swogr/swml.hpp"

namespace swogr {

inline nlohmann::json to_json(const SwmlDocument& doc) {
  nlohmann::json boxes = nlohmann::json::array();
  for (const auto& sb : doc.signboxes) {
    nlohmann::json glyphs = nlohmann::json::array();
    for (const auto& g : sb.glyphs) {
      glyphs.push_back({{"code", format_code(g.code)},
                        {"x", g.bbox.x},
                        {"y", g.bbox.y},
                        {"w", g.bbox.w},
                        {"h", g.bbox.h},
                        {"confidence", quantize_confidence(g.confidence)}});
    }
    boxes.push_back({{"id", sb.id},
                     {"x", sb.bbox.x},
                     {"y", sb.bbox.y},
                     {"w", sb.bbox.w},
                     {"h", sb.bbox.h},
                     {"glyphs", std::move(glyphs)}});
  }
  nlohmann::json unrec = nlohmann::json::array();
  for (const auto& u : doc.unrecognized) unrec.push_back({{"x", u.x}, {"y", u.y}, {"w", u.w}, {"h", u.h}});
  return {{"version", std::string(kSwmlVersion)},
          {"source", {{"image", doc.source.image}, {"width", doc.source.width}, {"height", doc.source.height}}},
          {"signboxes", std::move(boxes)},
          {"unrecognized", std::move(unrec)}};
}

namespace detail {

[[noreturn]] inline void json_violation(const std::string& what) { throw SchemaViolation(0, 0, what); }

inline const nlohmann::json& json_member(const nlohmann::json& j, const char* key, const char* where) {
  if (!j.is_object()) json_violation(std::string(where) + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) json_violation(std::string(where) + " missing required field '" + key + "'");
  return *it;
}

inline int json_int(const nlohmann::json& j, const char* key, const char* where) {
  const auto& v = json_member(j, key, where);
  if (!v.is_number_integer()) json_violation(std::string(where) + "." + key + " must be an integer");
  return v.get<int>();
}

inline BBox json_box(const nlohmann::json& j, const char* where) {
  return {json_int(j, "x", where), json_int(j, "y", where), json_int(j, "w", where), json_int(j, "h", where)};
}

}  // namespace detail

// Validates with the same rules as the XML reader.
inline SwmlDocument swml_from_json(const nlohmann::json& j) {
  SwmlDocument doc;
  if (auto it = j.find("version"); j.is_object() && it != j.end() && *it != std::string(kSwmlVersion))
    detail::json_violation("unsupported swml version");
  const auto& src = detail::json_member(j, "source", "document");
  const auto& image = detail::json_member(src, "image", "source");
  if (!image.is_string()) detail::json_violation("source.image must be a string");
  doc.source = {image.get<std::string>(), detail::json_int(src, "width", "source"),
                detail::json_int(src, "height", "source")};
  if (j.contains("signboxes")) {
    const auto& boxes = j.at("signboxes");
    if (!boxes.is_array()) detail::json_violation("signboxes must be an array");
    for (const auto& b : boxes) {
      SignBox sb;
      sb.id = detail::json_int(b, "id", "signbox");
      sb.bbox = detail::json_box(b, "signbox");
      if (b.contains("glyphs")) {
        const auto& glyphs = b.at("glyphs");
        if (!glyphs.is_array()) detail::json_violation("signbox.glyphs must be an array");
        for (const auto& gj : glyphs) {
          Glyph g;
          const auto& code = detail::json_member(gj, "code", "glyph");
          if (!code.is_string()) detail::json_violation("glyph.code must be a string");
          try {
            g.code = parse_code(code.get<std::string>());
          } catch (const Error& e) {
            detail::json_violation(e.what());
          }
          g.bbox = detail::json_box(gj, "glyph");
          const auto& conf = detail::json_member(gj, "confidence", "glyph");
          if (!conf.is_number()) detail::json_violation("glyph.confidence must be a number");
          g.confidence = conf.get<double>();
          sb.glyphs.push_back(g);
        }
      }
      doc.signboxes.push_back(std::move(sb));
    }
  }
  if (j.contains("unrecognized")) {
    const auto& unrec = j.at("unrecognized");
    if (!unrec.is_array()) detail::json_violation("unrecognized must be an array");
    for (const auto& u : unrec) doc.unrecognized.push_back(detail::json_box(u, "unrecognized"));
  }
  validate(doc);
  return doc;
}

}  // namespace swogr
