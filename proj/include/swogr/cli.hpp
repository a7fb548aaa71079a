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

// Command layer of the swogr tool. run_cli() is the whole program minus
// main(), so the exit-code contract can be tested in-process.
//
// Exit codes: 0 success; 1 batch finished with failed files; 2 usage error,
// unreadable or unparseable input; 3 output could not be written;
// 4 code not in the catalog.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "swogr/catalog.hpp"
#include "swogr/config.hpp"
#include "swogr/embed.hpp"
#include "swogr/engine.hpp"
#include "swogr/error.hpp"
#include "swogr/eval.hpp"
#include "swogr/image_io.hpp"
#include "swogr/render.hpp"
#include "swogr/swml.hpp"

namespace swogr {

enum ExitCode : int { kExitOk = 0, kExitBatchFailures = 1, kExitUsage = 2, kExitWrite = 3, kExitUnknownSymbol = 4 };

inline constexpr const char* kCatalogEnv = "SWOGR_CATALOG";

inline constexpr const char* kOverlayHelp =
    "Annotated images (--annotate) are RGB PNG: glyph boxes green (0,160,0) with the 13-digit code "
    "in a 3x5 pixel font, unrecognized components red (220,0,0), sign boxes blue (0,80,255) drawn "
    "2 px outside their bounds.";

namespace detail {

struct CliError {
  int code;
  std::string message;
};

inline std::string dashed(std::string_view key) {
  std::string s(key);
  std::replace(s.begin(), s.end(), '_', '-');
  return s;
}

struct CommonOptions {
  std::string config_path;
  std::string catalog_path;
  std::map<std::string, std::string> overrides;  // config key -> raw value

  void attach(CLI::App& app) {
    app.add_option("--config", config_path, "key = value recognizer config file");
    app.add_option("--catalog", catalog_path, "symbol catalog file (default: $SWOGR_CATALOG, else built-in)");
    for (const auto key : config_keys()) {
      const std::string k(key);
      app.add_option_function<std::string>(
          "--" + dashed(key), [this, k](const std::string& v) { overrides[k] = v; },
          "override config value " + k);
    }
  }

  RecognizerConfig config() const {
    try {
      RecognizerConfig cfg = config_path.empty() ? RecognizerConfig{} : load_config_file(config_path);
      for (const auto& [k, v] : overrides) set_config_value(cfg, k, v);
      validate(cfg);
      return cfg;
    } catch (const ConfigError& e) {
      throw CliError{kExitUsage, e.what()};
    }
  }

  SymbolCatalog catalog() const {
    std::string path = catalog_path;
    if (path.empty())
      if (const char* env = std::getenv(kCatalogEnv); env && *env) path = env;
    if (path.empty()) return default_catalog();
    try {
      return catalog_load_file(path);
    } catch (const Error& e) {
      throw CliError{kExitUsage, e.what()};
    }
  }
};

struct PageResult {
  std::size_t glyphs = 0;
  std::size_t signboxes = 0;
  std::size_t unrecognized = 0;
};

// Recognize one page and write <stem>.swml (and <stem>.ogr.png) into out_dir.
inline PageResult process_page(const std::filesystem::path& image, const std::filesystem::path& out_dir,
                               bool annotate, const SymbolCatalog& catalog, const RecognizerConfig& cfg) {
  GrayImage img;
  try {
    img = read_image(image);
  } catch (const Error& e) {
    throw CliError{kExitUsage, e.what()};
  }
  const auto outcome = recognize_page(img, catalog, cfg);
  const std::string name = image.filename().string();
  const std::string stem = image.stem().string();
  const std::string swml = swml_serialize(to_document(outcome, name));
  std::error_code ec;
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir, ec);  // failure surfaces on write
  try {
    write_file_bytes(out_dir / (stem + ".swml"),
                     std::span(reinterpret_cast<const std::uint8_t*>(swml.data()), swml.size()));
    if (annotate) write_image(out_dir / (stem + ".ogr.png"), embed(img, outcome, name).image);
  } catch (const WriteError& e) {
    throw CliError{kExitWrite, e.what()};
  }
  return {outcome.glyphs.size(), outcome.signboxes.size(), outcome.unrecognized.size()};
}

inline SwmlDocument read_swml_file(const std::string& path) {
  try {
    const auto bytes = read_file_bytes(path);
    return swml_parse(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
  } catch (const Error& e) {
    throw CliError{kExitUsage, path + ": " + e.what()};
  }
}

inline IswaCode parse_code_arg(const std::string& text) {
  try {
    return parse_code(text);
  } catch (const Error& e) {
    throw CliError{kExitUsage, e.what()};
  }
}

inline const SymbolMeta& find_symbol(const SymbolCatalog& catalog, const IswaCode& code) {
  if (const auto* m = catalog.find(code)) return *m;
  throw CliError{kExitUnknownSymbol, "unknown symbol " + format_code(code)};
}

inline void print_meta(std::ostream& out, const SymbolMeta& m) {
  out << fmt::format("{}\t{}\t{}\t{}\t{}\t{}\n", format_code(m.code), m.name, m.category_name,
                     primitive_name(m.glyph_template.primitive), m.glyph_template.nominal_size,
                     m.glyph_template.orientation_steps);
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"swogr: SignWriting optical glyph recognition", "swogr"};
  app.footer(kOverlayHelp);
  app.require_subcommand(1);

  detail::CommonOptions common;
  common.attach(app);  // accepted before or after the subcommand

  // recognize
  auto* rec = app.add_subcommand("recognize", "recognize one page image, write <stem>.swml");
  std::string rec_image;
  std::string rec_out;
  bool rec_annotate = false;
  rec->add_option("image", rec_image, "page image (.png or .pgm)")->required();
  rec->add_option("--out-dir,-o", rec_out, "output directory (default: next to the image)");
  rec->add_flag("--annotate", rec_annotate, "also write <stem>.ogr.png");
  common.attach(*rec);

  // batch
  auto* bat = app.add_subcommand("batch", "recognize every .png/.pgm in a directory");
  std::string bat_dir;
  std::string bat_out;
  bool bat_annotate = false;
  int jobs = 1;
  bat->add_option("dir", bat_dir, "input directory")->required();
  bat->add_option("--out-dir,-o", bat_out, "output directory (default: the input directory)");
  bat->add_flag("--annotate", bat_annotate, "also write <stem>.ogr.png");
  bat->add_option("--jobs,-j", jobs, "pages processed concurrently")->check(CLI::PositiveNumber);
  common.attach(*bat);

  // eval
  auto* ev = app.add_subcommand("eval", "compare predicted SWML against gold");
  std::string gold_path, pred_path;
  ev->add_option("gold", gold_path, "gold .swml")->required();
  ev->add_option("pred", pred_path, "predicted .swml")->required();

  // render
  auto* ren = app.add_subcommand("render", "render a catalog template to an image");
  std::string ren_code, ren_out;
  double scale = 1.0;
  ren->add_option("code", ren_code, "ISWA code; the rotation digit selects the orientation")->required();
  ren->add_option("out", ren_out, "output image (.png or .pgm)")->required();
  ren->add_option("--scale", scale, "template scale in [0.25, 4]");
  ren->add_option("--catalog", common.catalog_path, "symbol catalog file");

  // catalog
  auto* cat = app.add_subcommand("catalog", "inspect the symbol catalog");
  cat->require_subcommand(1);
  cat->add_option("--catalog", common.catalog_path, "symbol catalog file");
  auto* look = cat->add_subcommand("lookup", "print one entry");
  std::string look_code;
  look->add_option("code", look_code, "ISWA code")->required();
  auto* list = cat->add_subcommand("list", "print entries ordered by code");
  int list_category = 0;
  std::string list_query;
  list->add_option("--category", list_category, "category 1..7");
  list->add_option("--query,-q", list_query, "case-insensitive name substring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "swogr: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (rec->parsed()) {
      const auto cfg = common.config();
      const auto catalog = common.catalog();
      const std::filesystem::path image(rec_image);
      if (!std::filesystem::is_regular_file(image)) throw detail::CliError{kExitUsage, "cannot read " + rec_image};
      const auto dir = rec_out.empty() ? image.parent_path() : std::filesystem::path(rec_out);
      const auto r = detail::process_page(image, dir, rec_annotate, catalog, cfg);
      out << fmt::format("{}: {} glyphs, {} signboxes, {} unrecognized\n", image.filename().string(), r.glyphs,
                         r.signboxes, r.unrecognized);
      return kExitOk;
    }

    if (bat->parsed()) {
      const auto cfg = common.config();
      const auto catalog = common.catalog();
      const std::filesystem::path dir(bat_dir);
      if (!std::filesystem::is_directory(dir)) throw detail::CliError{kExitUsage, "not a directory: " + bat_dir};
      std::vector<std::filesystem::path> files;
      for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && has_image_extension(e.path())) files.push_back(e.path());
      std::sort(files.begin(), files.end());
      const auto out_dir = bat_out.empty() ? dir : std::filesystem::path(bat_out);

      std::vector<std::optional<std::string>> failures(files.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i; (i = next++) < files.size();) {
          try {
            detail::process_page(files[i], out_dir, bat_annotate, catalog, cfg);
          } catch (const detail::CliError& e) {
            failures[i] = e.message;
          } catch (const std::exception& e) {
            failures[i] = e.what();
          }
        }
      };
      const auto n = static_cast<std::size_t>(std::max(1, jobs));
      std::vector<std::thread> pool;
      for (std::size_t t = 1; t < std::min(n, files.size()); ++t) pool.emplace_back(worker);
      worker();
      for (auto& t : pool) t.join();

      std::size_t failed = 0;
      for (std::size_t i = 0; i < files.size(); ++i)
        if (failures[i]) {
          ++failed;
          err << files[i].filename().string() << ": " << *failures[i] << "\n";
        }
      out << fmt::format("{} ok, {} failed\n", files.size() - failed, failed);
      return failed == 0 ? kExitOk : kExitBatchFailures;
    }

    if (ev->parsed()) {
      const auto gold = detail::read_swml_file(gold_path);
      const auto pred = detail::read_swml_file(pred_path);
      const auto report = evaluate(gold, pred);
      out << format_eval_table(report) << format_eval_line(report) << "\n";
      return kExitOk;
    }

    if (ren->parsed()) {
      const auto catalog = common.catalog();
      const auto code = detail::parse_code_arg(ren_code);
      const auto& meta = detail::find_symbol(catalog, code);
      GrayImage img;
      try {
        img = render_template(meta, scale, code.rotation);
      } catch (const OutOfRange& e) {
        throw detail::CliError{kExitUsage, e.what()};
      }
      try {
        write_image(ren_out, img);
      } catch (const WriteError& e) {
        throw detail::CliError{kExitWrite, e.what()};
      }
      return kExitOk;
    }

    if (cat->parsed()) {
      const auto catalog = common.catalog();
      if (look->parsed()) {
        detail::print_meta(out, detail::find_symbol(catalog, detail::parse_code_arg(look_code)));
        return kExitOk;
      }
      if (list->count("--category") && (list_category < 1 || list_category > 7))
        throw detail::CliError{kExitUsage, "--category must lie in 1..7"};
      for (const auto* m : catalog.search(list_category, list_query)) detail::print_meta(out, *m);
      return kExitOk;
    }
  } catch (const detail::CliError& e) {
    err << "swogr: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    err << "swogr: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace swogr
