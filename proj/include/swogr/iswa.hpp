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

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <fmt/format.h>

#include "swogr/error.hpp"

namespace swogr {

// Structured 13-digit ISWA symbol identifier. Canonical text form is
// "CC-GG-BBB-VV-FF-RR": category, group, base, variation, fill, rotation.
struct IswaCode {
  int category = 1;
  int group = 1;
  int base = 1;
  int variation = 1;
  int fill = 1;
  int rotation = 1;

  auto operator<=>(const IswaCode&) const = default;

  // Same symbol up to the rotation digit.
  bool same_symbol(const IswaCode& o) const noexcept {
    return category == o.category && group == o.group && base == o.base &&
           variation == o.variation && fill == o.fill;
  }
};

inline constexpr int kMaxCategory = 7;
inline constexpr std::array<int, 6> kCodeFieldWidths{2, 2, 3, 2, 2, 2};

namespace detail {

inline void check_code_range(const IswaCode& c) {
  if (c.category < 1 || c.category > kMaxCategory)
    throw OutOfRange("category " + std::to_string(c.category) + " outside [1,7]");
  const std::array<int, 6> v{c.category, c.group, c.base, c.variation, c.fill, c.rotation};
  static constexpr std::array<int, 6> max_value{7, 99, 999, 99, 99, 99};
  static constexpr std::array<const char*, 6> names{"category", "group",  "base",
                                                    "variation", "fill", "rotation"};
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1 || v[i] > max_value[i])
      throw OutOfRange(std::string(names[i]) + " " + std::to_string(v[i]) + " out of range");
  }
}

}  // namespace detail

inline bool is_valid(const IswaCode& c) noexcept {
  try {
    detail::check_code_range(c);
    return true;
  } catch (const OutOfRange&) {
    return false;
  }
}

// Accepts the canonical dashed form and the bare 13-digit form.
inline IswaCode parse_code(std::string_view text) {
  std::array<char, 13> digits{};
  if (text.size() == 13) {
    for (std::size_t i = 0; i < 13; ++i) digits[i] = text[i];
  } else if (text.size() == 18) {
    std::size_t pos = 0;
    std::size_t out = 0;
    for (std::size_t f = 0; f < kCodeFieldWidths.size(); ++f) {
      if (f > 0) {
        if (text[pos] != '-')
          throw MalformedCode("expected '-' at offset " + std::to_string(pos) + " in '" +
                              std::string(text) + "'");
        ++pos;
      }
      for (int k = 0; k < kCodeFieldWidths[f]; ++k) digits[out++] = text[pos++];
    }
  } else {
    throw MalformedCode("code '" + std::string(text) + "' must have 13 digits or 18 characters");
  }
  for (char ch : digits) {
    if (ch < '0' || ch > '9')
      throw MalformedCode("non-digit in code '" + std::string(text) + "'");
  }

  std::array<int, 6> fields{};
  std::size_t pos = 0;
  for (std::size_t f = 0; f < kCodeFieldWidths.size(); ++f) {
    int value = 0;
    for (int k = 0; k < kCodeFieldWidths[f]; ++k) value = value * 10 + (digits[pos++] - '0');
    fields[f] = value;
  }
  IswaCode code{fields[0], fields[1], fields[2], fields[3], fields[4], fields[5]};
  detail::check_code_range(code);
  return code;
}

inline std::string format_code(const IswaCode& c) {
  return fmt::format("{:02d}-{:02d}-{:03d}-{:02d}-{:02d}-{:02d}", c.category, c.group, c.base,
                     c.variation, c.fill, c.rotation);
}

}  // namespace swogr
