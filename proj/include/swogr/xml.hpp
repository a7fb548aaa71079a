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

// Minimal non-validating XML reader: elements, attributes, comments,
// processing instructions, CDATA and the predefined/numeric entities.
// Enough for document formats we own; DTDs are rejected.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swogr/error.hpp"

namespace swogr::xml {

struct Attribute {
  std::string name;
  std::string value;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Element {
  std::string name;
  std::vector<Attribute> attributes;
  std::vector<Element> children;
  std::string text;  // concatenated character data directly inside this element
  std::size_t line = 0;
  std::size_t column = 0;

  const Attribute* attribute(std::string_view n) const noexcept {
    for (const auto& a : attributes)
      if (a.name == n) return &a;
    return nullptr;
  }
};

class Reader {
 public:
  explicit Reader(std::string_view input) : in_(input) {}

  Element parse_document() {
    skip_prolog();
    if (eof() || peek() != '<') fail("expected root element");
    Element root = parse_element();
    skip_misc();
    if (!eof()) fail("content after root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SwmlParseError(line_, col_, what); }

  bool eof() const noexcept { return pos_ >= in_.size(); }
  char peek(std::size_t k = 0) const noexcept {
    return pos_ + k < in_.size() ? in_[pos_ + k] : '\0';
  }
  bool starts_with(std::string_view s) const noexcept { return in_.substr(pos_).starts_with(s); }

  char get() {
    if (eof()) fail("unexpected end of input");
    const char c = in_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void expect(std::string_view s) {
    if (!starts_with(s)) fail("expected '" + std::string(s) + "'");
    for (std::size_t i = 0; i < s.size(); ++i) get();
  }

  static bool is_space(char c) noexcept { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
  static bool is_name_start(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == ':' ||
           static_cast<unsigned char>(c) >= 0x80;
  }
  static bool is_name_char(char c) noexcept {
    return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
  }

  void skip_space() {
    while (!eof() && is_space(peek())) get();
  }

  void skip_until(std::string_view terminator) {
    while (!starts_with(terminator)) {
      if (eof()) fail("unterminated construct, expected '" + std::string(terminator) + "'");
      get();
    }
    expect(terminator);
  }

  void skip_misc() {
    for (;;) {
      skip_space();
      if (starts_with("<!--")) {
        expect("<!--");
        skip_until("-->");
      } else if (starts_with("<?")) {
        expect("<?");
        skip_until("?>");
      } else {
        return;
      }
    }
  }

  void skip_prolog() {
    if (starts_with("\xEF\xBB\xBF")) {
      pos_ += 3;
    }
    skip_misc();
    if (starts_with("<!DOCTYPE")) fail("DTDs are not supported");
  }

  std::string parse_name() {
    if (eof() || !is_name_start(peek())) fail("expected a name");
    std::string name;
    while (!eof() && is_name_char(peek())) name.push_back(get());
    return name;
  }

  static void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }

  void parse_entity(std::string& out) {
    expect("&");
    std::string ent;
    while (!eof() && peek() != ';') {
      ent.push_back(get());
      if (ent.size() > 10) fail("malformed entity reference");
    }
    expect(";");
    if (ent == "amp") out.push_back('&');
    else if (ent == "lt") out.push_back('<');
    else if (ent == "gt") out.push_back('>');
    else if (ent == "quot") out.push_back('"');
    else if (ent == "apos") out.push_back('\'');
    else if (ent.size() > 1 && ent[0] == '#') {
      std::uint32_t cp = 0;
      const bool hex = ent[1] == 'x';
      const std::size_t first = hex ? 2 : 1;
      if (first >= ent.size()) fail("malformed character reference");
      for (std::size_t i = first; i < ent.size(); ++i) {
        const char c = ent[i];
        int d = -1;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (hex && c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F') d = c - 'A' + 10;
        if (d < 0) fail("malformed character reference");
        cp = cp * (hex ? 16 : 10) + static_cast<std::uint32_t>(d);
        if (cp > 0x10FFFF) fail("character reference out of range");
      }
      if (cp == 0) fail("character reference out of range");
      append_utf8(out, cp);
    } else {
      fail("unknown entity '&" + ent + ";'");
    }
  }

  Attribute parse_attribute() {
    Attribute a;
    a.line = line_;
    a.column = col_;
    a.name = parse_name();
    skip_space();
    expect("=");
    skip_space();
    const char quote = peek();
    if (quote != '"' && quote != '\'') fail("attribute value must be quoted");
    get();
    while (!eof() && peek() != quote) {
      if (peek() == '<') fail("'<' in attribute value");
      if (peek() == '&') {
        parse_entity(a.value);
      } else {
        a.value.push_back(get());
      }
    }
    expect(std::string_view(&quote, 1));
    return a;
  }

  Element parse_element() {
    Element el;
    el.line = line_;
    el.column = col_;
    expect("<");
    el.name = parse_name();
    for (;;) {
      const bool had_space = !eof() && is_space(peek());
      skip_space();
      if (starts_with("/>")) {
        expect("/>");
        return el;
      }
      if (peek() == '>') {
        get();
        break;
      }
      if (!had_space) fail("expected whitespace before attribute");
      Attribute a = parse_attribute();
      if (el.attribute(a.name)) fail("duplicate attribute '" + a.name + "'");
      el.attributes.push_back(std::move(a));
    }

    for (;;) {
      if (eof()) fail("unterminated element <" + el.name + ">");
      if (starts_with("</")) {
        expect("</");
        const std::string closing = parse_name();
        if (closing != el.name)
          fail("mismatched closing tag </" + closing + "> for <" + el.name + ">");
        skip_space();
        expect(">");
        return el;
      }
      if (starts_with("<!--")) {
        expect("<!--");
        skip_until("-->");
      } else if (starts_with("<![CDATA[")) {
        expect("<![CDATA[");
        while (!starts_with("]]>")) el.text.push_back(get());
        expect("]]>");
      } else if (starts_with("<?")) {
        expect("<?");
        skip_until("?>");
      } else if (peek() == '<') {
        el.children.push_back(parse_element());
      } else if (peek() == '&') {
        parse_entity(el.text);
      } else {
        el.text.push_back(get());
      }
    }
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

inline Element parse(std::string_view input) { return Reader(input).parse_document(); }

inline std::string escape_attribute(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\n': out += "&#10;"; break;
      case '\t': out += "&#9;"; break;
      case '\r': out += "&#13;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace swogr::xml
