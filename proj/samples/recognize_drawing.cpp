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
// Renders a small sign (head over an arrow), recognizes it, and writes the
// SWML plus an annotated PNG into the current directory.
//
//   recognize_drawing [out-stem]

#include <iostream>
#include <string>

#include "swogr/swogr.hpp"

int main(int argc, char** argv) {
  const std::string stem = argc > 1 ? argv[1] : "drawing";
  const auto& catalog = swogr::default_catalog();

  swogr::GrayImage page(240, 260, 255);
  swogr::composite(page, swogr::render_template(catalog.lookup(swogr::codes::kHead), 1.0), 80, 10);
  // rotation step 5: arrow pointing down (180 degrees from up)
  swogr::composite(page, swogr::render_template(catalog.lookup(swogr::codes::kStraightMovement), 1.0, 5), 60, 100);
  swogr::composite(page, swogr::render_template(catalog.lookup(swogr::codes::kFist), 1.0), 170, 30);

  const auto outcome = swogr::recognize_page(page, catalog);
  for (const auto& g : outcome.glyphs)
    std::cout << swogr::format_code(g.code) << "  " << catalog.find(g.code)->name << "  at " << g.bbox.x << ","
              << g.bbox.y << "  confidence " << g.confidence << "\n";
  std::cout << outcome.signboxes.size() << " sign boxes, " << outcome.unrecognized.size() << " unrecognized\n";

  const auto result = swogr::embed(page, outcome, stem + ".png");
  const auto swml = swogr::swml_serialize(result.swml);
  swogr::write_file_bytes(stem + ".swml", std::span(reinterpret_cast<const std::uint8_t*>(swml.data()), swml.size()));
  swogr::write_image(stem + ".png", page);
  swogr::write_image(stem + ".ogr.png", result.image);
  return 0;
}
