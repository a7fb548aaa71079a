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
#include <cctype>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "swogr/error.hpp"
#include "swogr/iswa.hpp"

namespace swogr {

enum class Primitive {
  circle_outline,
  circle_filled,
  square_outline,
  square_filled,
  square_with_finger,
  straight_arrow,
  contact_star,
};

inline constexpr std::string_view primitive_name(Primitive p) noexcept {
  switch (p) {
    case Primitive::circle_outline: return "circle_outline";
    case Primitive::circle_filled: return "circle_filled";
    case Primitive::square_outline: return "square_outline";
    case Primitive::square_filled: return "square_filled";
    case Primitive::square_with_finger: return "square_with_finger";
    case Primitive::straight_arrow: return "straight_arrow";
    case Primitive::contact_star: return "contact_star";
  }
  return "unknown";
}

inline std::optional<Primitive> primitive_from_name(std::string_view name) noexcept {
  for (Primitive p : {Primitive::circle_outline, Primitive::circle_filled,
                      Primitive::square_outline, Primitive::square_filled,
                      Primitive::square_with_finger, Primitive::straight_arrow,
                      Primitive::contact_star}) {
    if (primitive_name(p) == name) return p;
  }
  return std::nullopt;
}

struct GlyphTemplate {
  Primitive primitive = Primitive::circle_outline;
  int nominal_size = 40;       // pixels at scale 1
  int orientation_steps = 1;   // 1 or 8
  bool operator==(const GlyphTemplate&) const = default;
};

struct SymbolMeta {
  IswaCode code;
  std::string name;
  std::string category_name;
  GlyphTemplate glyph_template;
  bool operator==(const SymbolMeta&) const = default;
};

// Read-only symbol table keyed by code. Entries whose template has 8
// orientation steps are stored with rotation 1 and also answer lookups for
// rotations 2..8.
class SymbolCatalog {
 public:
  SymbolCatalog() = default;

  void add(SymbolMeta meta) {
    if (entries_.contains(meta.code))
      throw DuplicateCode("duplicate code " + format_code(meta.code));
    entries_.emplace(meta.code, std::move(meta));
  }

  const SymbolMeta& lookup(const IswaCode& code) const {
    if (const auto* m = find(code)) return *m;
    throw UnknownSymbol("unknown symbol " + format_code(code));
  }

  const SymbolMeta* find(const IswaCode& code) const noexcept {
    if (auto it = entries_.find(code); it != entries_.end()) return &it->second;
    IswaCode base = code;
    base.rotation = 1;
    if (auto it = entries_.find(base); it != entries_.end() &&
                                       code.rotation <= it->second.glyph_template.orientation_steps)
      return &it->second;
    return nullptr;
  }

  bool contains(const IswaCode& code) const noexcept { return find(code) != nullptr; }

  // Entries ordered by code.
  std::vector<const SymbolMeta*> entries() const {
    std::vector<const SymbolMeta*> out;
    out.reserve(entries_.size());
    for (const auto& [code, meta] : entries_) out.push_back(&meta);
    return out;
  }

  // Entries of one category (0 = all) whose name contains query,
  // case-insensitively. Ordered by code.
  std::vector<const SymbolMeta*> search(int category, std::string_view query) const {
    auto lower = [](std::string_view s) {
      std::string r(s);
      std::transform(r.begin(), r.end(), r.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      return r;
    };
    const std::string q = lower(query);
    std::vector<const SymbolMeta*> out;
    for (const auto& [code, meta] : entries_) {
      if (category != 0 && code.category != category) continue;
      if (!q.empty() && lower(meta.name).find(q) == std::string::npos) continue;
      out.push_back(&meta);
    }
    return out;
  }

  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<IswaCode, SymbolMeta> entries_;
};

namespace detail {

inline std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

inline std::optional<int> to_int(std::string_view s) noexcept {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace detail

// Line format: code|name|category_name|primitive|nominal_size|orientation_steps
// Blank lines and lines starting with '#' are ignored.
inline SymbolCatalog catalog_load(std::string_view text) {
  SymbolCatalog catalog;
  std::map<int, std::string> category_names;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = detail::trim(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    auto fields = detail::split(line, '|');
    if (fields.size() != 6)
      throw CatalogParseError(line_no, "expected 6 '|'-separated fields, got " +
                                           std::to_string(fields.size()));
    for (auto& f : fields) f = detail::trim(f);

    SymbolMeta meta;
    try {
      meta.code = parse_code(fields[0]);
    } catch (const Error& e) {
      throw CatalogParseError(line_no, e.what());
    }
    if (fields[1].empty()) throw CatalogParseError(line_no, "empty name");
    if (fields[2].empty()) throw CatalogParseError(line_no, "empty category name");
    meta.name = std::string(fields[1]);
    meta.category_name = std::string(fields[2]);

    auto prim = primitive_from_name(fields[3]);
    if (!prim) throw CatalogParseError(line_no, "unknown primitive '" + std::string(fields[3]) + "'");
    auto size = detail::to_int(fields[4]);
    if (!size || *size <= 0) throw CatalogParseError(line_no, "nominal_size must be a positive integer");
    auto steps = detail::to_int(fields[5]);
    if (!steps || (*steps != 1 && *steps != 8))
      throw CatalogParseError(line_no, "orientation_steps must be 1 or 8");
    if (*steps == 8 && meta.code.rotation != 1)
      throw CatalogParseError(line_no, "rotatable symbols are listed with rotation 01");
    meta.glyph_template = {*prim, *size, *steps};

    auto [it, inserted] = category_names.emplace(meta.code.category, meta.category_name);
    if (!inserted && it->second != meta.category_name)
      throw CatalogParseError(line_no, "category " + std::to_string(meta.code.category) +
                                           " already named '" + it->second + "'");

    catalog.add(std::move(meta));
    if (end == text.size()) break;
  }
  return catalog;
}

inline SymbolCatalog catalog_load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open catalog '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return catalog_load(ss.str());
}

inline const SymbolMeta& catalog_lookup(const SymbolCatalog& catalog, const IswaCode& code) {
  return catalog.lookup(code);
}

// The recognition subset: one archetype per template primitive.
inline constexpr std::string_view kDefaultCatalogText =
    "# code|name|category_name|primitive|nominal_size|orientation_steps\n"
    "# categories: 1 hands, 2 movement, 3 dynamics/timing, 4 head/faces,\n"
    "#             5 body, 6 detailed location, 7 punctuation\n"
    "01-01-001-01-01-01|index|hands|square_with_finger|40|1\n"
    "01-10-001-01-01-01|fist|hands|square_outline|40|1\n"
    "01-10-001-01-02-01|fist back|hands|square_filled|40|1\n"
    "02-01-001-01-01-01|touch|movement|contact_star|40|1\n"
    "02-01-002-01-02-01|brush|movement|circle_filled|40|1\n"
    "02-05-001-01-01-01|straight movement|movement|straight_arrow|80|8\n"
    "04-01-001-01-01-01|head|head/faces|circle_outline|60|1\n";

inline const SymbolCatalog& default_catalog() {
  static const SymbolCatalog catalog = catalog_load(kDefaultCatalogText);
  return catalog;
}

}  // namespace swogr
