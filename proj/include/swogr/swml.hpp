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

// SWML: the recognition result as XML. Canonical output is LF-terminated,
// two-space indented, attributes in fixed order; the reader is liberal about
// whitespace, attribute order, quoting, comments and entities.

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "swogr/error.hpp"
#include "swogr/geometry.hpp"
#include "swogr/iswa.hpp"
#include "swogr/xml.hpp"

namespace swogr {

struct Glyph {
  IswaCode code;
  BBox bbox;
  double confidence = 1.0;
  bool operator==(const Glyph&) const = default;
};

// Glyph bboxes are relative to the sign box origin.
struct SignBox {
  int id = 1;
  BBox bbox;
  std::vector<Glyph> glyphs;
  bool operator==(const SignBox&) const = default;
};

struct SwmlSource {
  std::string image;
  int width = 1;
  int height = 1;
  bool operator==(const SwmlSource&) const = default;
};

struct SwmlDocument {
  SwmlSource source;
  std::vector<SignBox> signboxes;
  std::vector<BBox> unrecognized;  // page frame
  bool operator==(const SwmlDocument&) const = default;
};

inline constexpr std::string_view kSwmlVersion = "1.0";

// Confidence as it survives the two-decimal text form.
inline double quantize_confidence(double c) noexcept { return std::round(c * 100.0) / 100.0; }

namespace detail {

inline void check_box(const BBox& b, const std::string& what, std::size_t line, std::size_t col) {
  if (b.w <= 0 || b.h <= 0) throw SchemaViolation(line, col, what + " must have positive w and h");
}

}  // namespace detail

// Throws SchemaViolation (position 0:0) when a document breaks the
// containment, range or id rules.
inline void validate(const SwmlDocument& doc) {
  if (doc.source.width < 1 || doc.source.height < 1)
    throw SchemaViolation(0, 0, "source dimensions must be positive");
  std::set<int> ids;
  for (const auto& sb : doc.signboxes) {
    const std::string where = "signbox " + std::to_string(sb.id);
    if (sb.id < 1) throw SchemaViolation(0, 0, where + ": id must be positive");
    if (!ids.insert(sb.id).second) throw SchemaViolation(0, 0, where + ": duplicate id");
    detail::check_box(sb.bbox, where, 0, 0);
    if (!sb.bbox.inside(doc.source.width, doc.source.height))
      throw SchemaViolation(0, 0, where + " lies outside the page");
    const BBox local{0, 0, sb.bbox.w, sb.bbox.h};
    for (const auto& g : sb.glyphs) {
      detail::check_box(g.bbox, where + " glyph", 0, 0);
      if (!local.contains(g.bbox))
        throw SchemaViolation(0, 0, where + ": glyph " + format_code(g.code) + " outside its sign box");
      if (!is_valid(g.code)) throw SchemaViolation(0, 0, where + ": invalid glyph code");
      if (!(g.confidence >= 0.0 && g.confidence <= 1.0))
        throw SchemaViolation(0, 0, where + ": confidence outside [0,1]");
    }
  }
  // unique and positive, so contiguous from 1 iff the largest is the count
  if (!ids.empty() && *ids.rbegin() != static_cast<int>(ids.size()))
    throw SchemaViolation(0, 0, "signbox ids must run 1.." + std::to_string(ids.size()));
  for (const auto& u : doc.unrecognized) {
    detail::check_box(u, "unrecognized box", 0, 0);
    if (!u.inside(doc.source.width, doc.source.height))
      throw SchemaViolation(0, 0, "unrecognized box outside the page");
  }
}

inline std::string swml_serialize(const SwmlDocument& doc) {
  validate(doc);
  std::string out;
  out += fmt::format("<swml version=\"{}\">\n", kSwmlVersion);
  out += fmt::format("  <source image=\"{}\" width=\"{}\" height=\"{}\"/>\n",
                     xml::escape_attribute(doc.source.image), doc.source.width, doc.source.height);
  for (const auto& sb : doc.signboxes) {
    const auto head = fmt::format("  <signbox id=\"{}\" x=\"{}\" y=\"{}\" w=\"{}\" h=\"{}\"", sb.id,
                                  sb.bbox.x, sb.bbox.y, sb.bbox.w, sb.bbox.h);
    if (sb.glyphs.empty()) {
      out += head + "/>\n";
      continue;
    }
    out += head + ">\n";
    for (const auto& g : sb.glyphs) {
      out += fmt::format(
          "    <glyph code=\"{}\" x=\"{}\" y=\"{}\" w=\"{}\" h=\"{}\" confidence=\"{:.2f}\"/>\n",
          format_code(g.code), g.bbox.x, g.bbox.y, g.bbox.w, g.bbox.h, quantize_confidence(g.confidence));
    }
    out += "  </signbox>\n";
  }
  for (const auto& u : doc.unrecognized)
    out += fmt::format("  <unrecognized x=\"{}\" y=\"{}\" w=\"{}\" h=\"{}\"/>\n", u.x, u.y, u.w, u.h);
  out += "</swml>\n";
  return out;
}

namespace detail {

class SwmlBuilder {
 public:
  SwmlDocument build(const xml::Element& root) {
    if (root.name != "swml") violation(root, "root element must be <swml>, got <" + root.name + ">");
    const auto* version = root.attribute("version");
    if (!version) violation(root, "missing required attribute 'version'");
    if (version->value != kSwmlVersion)
      violation(root, "unsupported swml version '" + version->value + "'");
    no_text(root);

    SwmlDocument doc;
    bool have_source = false;
    for (const auto& child : root.children) {
      if (child.name == "source") {
        if (have_source) violation(child, "duplicate <source>");
        have_source = true;
        no_children(child);
        doc.source.image = required(child, "image").value;
        doc.source.width = integer(child, "width");
        doc.source.height = integer(child, "height");
        if (doc.source.width < 1 || doc.source.height < 1)
          violation(child, "source dimensions must be positive");
      } else if (child.name != "signbox" && child.name != "unrecognized") {
        violation(child, "unexpected element <" + child.name + ">");
      }
    }
    if (!have_source) violation(root, "missing <source>");

    std::set<int> ids;
    for (const auto& child : root.children) {
      if (child.name == "signbox") {
        doc.signboxes.push_back(signbox(child, doc.source));
        if (!ids.insert(doc.signboxes.back().id).second)
          violation(child, "duplicate signbox id " + std::to_string(doc.signboxes.back().id));
      } else if (child.name == "unrecognized") {
        no_children(child);
        BBox b = box(child);
        if (!b.inside(doc.source.width, doc.source.height))
          violation(child, "unrecognized box outside the page");
        doc.unrecognized.push_back(b);
      }
    }
    if (!ids.empty() && *ids.rbegin() != static_cast<int>(ids.size()))
      violation(root, "signbox ids must run 1.." + std::to_string(ids.size()));
    return doc;
  }

 private:
  [[noreturn]] static void violation(const xml::Element& el, const std::string& what) {
    throw SchemaViolation(el.line, el.column, what);
  }

  static void no_text(const xml::Element& el) {
    for (char c : el.text)
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r')
        violation(el, "unexpected character data in <" + el.name + ">");
  }

  static void no_children(const xml::Element& el) {
    no_text(el);
    if (!el.children.empty()) violation(el.children.front(), "<" + el.name + "> must be empty");
  }

  static const xml::Attribute& required(const xml::Element& el, std::string_view name) {
    const auto* a = el.attribute(name);
    if (!a) violation(el, "<" + el.name + "> missing required attribute '" + std::string(name) + "'");
    return *a;
  }

  static std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
      s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
      s.remove_suffix(1);
    return s;
  }

  static int integer(const xml::Element& el, std::string_view name) {
    const auto& a = required(el, name);
    std::string_view v = trimmed(a.value);
    if (!v.empty() && v.front() == '+') v.remove_prefix(1);
    int out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size())
      throw SchemaViolation(a.line, a.column,
                            "attribute '" + a.name + "' must be an integer, got '" + a.value + "'");
    return out;
  }

  static BBox box(const xml::Element& el) {
    BBox b{integer(el, "x"), integer(el, "y"), integer(el, "w"), integer(el, "h")};
    if (b.w <= 0 || b.h <= 0) violation(el, "<" + el.name + "> must have positive w and h");
    return b;
  }

  static double confidence(const xml::Element& el) {
    const auto& a = required(el, "confidence");
    const std::string v(trimmed(a.value));
    bool ok = !v.empty();
    for (char c : v)
      if (!((c >= '0' && c <= '9') || c == '.' || c == 'e' || c == 'E' || c == '+' || c == '-')) ok = false;
    char* end = nullptr;
    const double d = ok ? std::strtod(v.c_str(), &end) : 0.0;
    if (!ok || end != v.c_str() + v.size() || !(d >= 0.0 && d <= 1.0))
      throw SchemaViolation(a.line, a.column, "confidence must be a number in [0,1], got '" + a.value + "'");
    return d;
  }

  static SignBox signbox(const xml::Element& el, const SwmlSource& src) {
    no_text(el);
    SignBox sb;
    sb.id = integer(el, "id");
    if (sb.id < 1) violation(el, "signbox id must be positive");
    sb.bbox = box(el);
    if (!sb.bbox.inside(src.width, src.height)) violation(el, "signbox lies outside the page");
    const BBox local{0, 0, sb.bbox.w, sb.bbox.h};
    for (const auto& child : el.children) {
      if (child.name != "glyph") violation(child, "unexpected element <" + child.name + "> in <signbox>");
      no_children(child);
      Glyph g;
      const auto& code = required(child, "code");
      try {
        g.code = parse_code(trimmed(code.value));
      } catch (const Error& e) {
        throw SchemaViolation(code.line, code.column, e.what());
      }
      g.bbox = box(child);
      if (!local.contains(g.bbox)) violation(child, "glyph lies outside its sign box");
      g.confidence = confidence(child);
      sb.glyphs.push_back(g);
    }
    return sb;
  }
};

}  // namespace detail

inline SwmlDocument swml_parse(std::string_view bytes) {
  const xml::Element root = xml::parse(bytes);
  return detail::SwmlBuilder{}.build(root);
}

}  // namespace swogr
