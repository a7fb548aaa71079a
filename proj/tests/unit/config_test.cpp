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
#include "swogr/config.hpp"

TEST(Config, Defaults) {
  const swogr::RecognizerConfig c;
  EXPECT_DOUBLE_EQ(c.tau_circ, 0.80);
  EXPECT_DOUBLE_EQ(c.tau_fill, 0.60);
  EXPECT_DOUBLE_EQ(c.tau_elong, 3.0);
  EXPECT_DOUBLE_EQ(c.tau_extent_square, 0.80);
  EXPECT_EQ(c.min_area, 16);
  EXPECT_EQ(c.signbox_gap, 40);
  EXPECT_DOUBLE_EQ(c.column_overlap, 0.3);
  EXPECT_NO_THROW(swogr::validate(c));
}

TEST(Config, ParseOverridesOnlyNamedKeys) {
  const auto c = swogr::parse_config("# tuned for pencil scans\ntau_circ = 0.75\n\n  signbox_gap=55  \r\n");
  EXPECT_DOUBLE_EQ(c.tau_circ, 0.75);
  EXPECT_EQ(c.signbox_gap, 55);
  EXPECT_DOUBLE_EQ(c.tau_fill, 0.60);
}

TEST(Config, FormatRoundTrips) {
  swogr::RecognizerConfig c;
  c.tau_elong = 4.25;
  c.min_area = 30;
  c.column_overlap = 0.1;
  EXPECT_EQ(swogr::parse_config(swogr::format_config(c)), c);
}

TEST(Config, Errors) {
  for (const char* bad : {"tau_circ 0.8", "nope = 1", "tau_circ = high", "min_area = 2.5", "tau_circ = 1.5",
                          "column_overlap = -0.1", "column_overlap = 1.5", "signbox_gap = -1", "tau_elong = 0.5", "min_area = 0"})
    EXPECT_THROW(swogr::parse_config(bad), swogr::ConfigError) << bad;
}

TEST(Config, ErrorNamesLine) {
  try {
    swogr::parse_config("tau_circ = 0.8\n\nbogus = 1\n");
    FAIL();
  } catch (const swogr::ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Config, SetValueAndKeys) {
  swogr::RecognizerConfig c;
  swogr::set_config_value(c, "tau_fill", "0.5");
  EXPECT_DOUBLE_EQ(c.tau_fill, 0.5);
  const auto keys = swogr::config_keys();
  EXPECT_EQ(keys.size(), 12u);
  EXPECT_NE(std::find(keys.begin(), keys.end(), "min_hole_area"), keys.end());
}

TEST(Config, LoadFile) {
  fixture::TempDir tmp;
  { std::ofstream(tmp / "c.cfg") << "tau_elong = 5\n"; }
  EXPECT_DOUBLE_EQ(swogr::load_config_file((tmp / "c.cfg").string()).tau_elong, 5.0);
  EXPECT_THROW(swogr::load_config_file((tmp / "none.cfg").string()), swogr::ConfigError);
}
