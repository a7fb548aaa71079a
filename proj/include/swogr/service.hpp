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

// Transport-independent request handlers behind the HTTP service. Each
// handler takes the decoded request parts and returns a status + JSON body,
// so the whole API is testable without sockets.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <fmt/format.h>
#include <json.hpp>

#include "swogr/catalog.hpp"
#include "swogr/config.hpp"
#include "swogr/engine.hpp"
#include "swogr/error.hpp"
#include "swogr/image_io.hpp"
#include "swogr/store.hpp"
#include "swogr/strokes.hpp"
#include "swogr/swml_json.hpp"

namespace swogr {

struct ServiceOptions {
  std::filesystem::path store = "swogr-store";
  RecognizerConfig config{};
  int max_width = 8192;
  int max_height = 8192;
};

struct ApiResponse {
  int status = 200;
  std::string body;  // always JSON
  std::map<std::string, std::string> headers;
};

inline constexpr const char* kTimingHeader = "X-Swogr-Ms";

namespace detail {

inline ApiResponse json_response(int status, const nlohmann::json& body) {
  return {status, body.dump(), {}};
}

inline ApiResponse error_response(int status, std::string_view message) {
  return json_response(status, {{"error", message}, {"status", status}});
}

// Media type without parameters, lowercased.
inline std::string media_type(std::string_view content_type) {
  const auto semi = content_type.find(';');
  std::string out(trim_ws(content_type.substr(0, semi)));
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Dimensions from the PNG IHDR without decoding the pixels.
inline std::optional<std::pair<long, long>> png_dimensions(std::span<const std::uint8_t> b) {
  if (b.size() < 24 || sniff_format(b) != ImageFormat::png) return std::nullopt;
  auto be32 = [&](std::size_t o) {
    return (long(b[o]) << 24) | (long(b[o + 1]) << 16) | (long(b[o + 2]) << 8) | long(b[o + 3]);
  };
  return std::pair{be32(16), be32(20)};
}

inline nlohmann::json meta_json(const SymbolMeta& m) {
  return {{"code", format_code(m.code)},
          {"name", m.name},
          {"category", m.code.category},
          {"category_name", m.category_name},
          {"primitive", std::string(primitive_name(m.glyph_template.primitive))},
          {"nominal_size", m.glyph_template.nominal_size},
          {"orientation_steps", m.glyph_template.orientation_steps}};
}

inline nlohmann::json record_json(const DocumentRecord& r) {
  return {{"doc_id", r.doc_id},
          {"status", status_name(r.status)},
          {"created", r.created},
          {"updated", r.updated},
          {"swml", to_json(r.swml)}};
}

}  // namespace detail

class Service {
 public:
  Service(ServiceOptions opts, SymbolCatalog catalog)
      : opts_(std::move(opts)), catalog_(std::move(catalog)), store_(opts_.store) {
    validate(opts_.config);
  }

  const ServiceOptions& options() const noexcept { return opts_; }
  const SymbolCatalog& catalog() const noexcept { return catalog_; }
  DocumentStore& store() noexcept { return store_; }

  // Body: a StrokeSet (application/json) or an image upload. The timing is
  // sent in a header; `include_ms` also puts it in the body, which then is
  // no longer byte-for-byte reproducible.
  ApiResponse recognize(std::string_view content_type, std::string_view body, std::string image_name = {},
                        bool include_ms = false) const {
    const std::string type = detail::media_type(content_type);
    const auto bytes =
        std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(body.data()), body.size());
    RecognitionOutcome outcome;
    try {
      if (type == "application/json") {
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(body);
        } catch (const nlohmann::json::exception& e) {
          return detail::error_response(400, std::string("malformed JSON: ") + e.what());
        }
        StrokeSet set;
        try {
          set = strokes_from_json(j);
        } catch (const Error& e) {
          return detail::error_response(400, e.what());
        }
        if (set.width > opts_.max_width || set.height > opts_.max_height)
          return detail::error_response(413, "canvas exceeds the configured maximum dimensions");
        if (image_name.empty()) image_name = "strokes";
        outcome = recognize_strokes(set, catalog_, opts_.config);
      } else if (type == "image/png" || type == "image/x-portable-graymap") {
        if (auto dims = detail::png_dimensions(bytes);
            dims && (dims->first > opts_.max_width || dims->second > opts_.max_height))
          return detail::error_response(413, "image exceeds the configured maximum dimensions");
        GrayImage img;
        try {
          img = decode_image(bytes);
        } catch (const ImageError& e) {
          return detail::error_response(400, e.what());
        }
        if (img.width() > opts_.max_width || img.height() > opts_.max_height)
          return detail::error_response(413, "image exceeds the configured maximum dimensions");
        if (image_name.empty()) image_name = "upload";
        outcome = recognize_page(img, catalog_, opts_.config);
      } else {
        return detail::error_response(400, "unsupported content type '" + type + "'");
      }
    } catch (const EmptyInk& e) {
      return detail::error_response(422, e.what());
    }
    nlohmann::json out{{"swml", to_json(to_document(outcome, image_name))},
                       {"glyphs", outcome.glyphs.size()},
                       {"unrecognized", outcome.unrecognized.size()}};
    if (include_ms) out["ms"] = outcome.timing.total_ms;
    auto res = detail::json_response(200, out);
    res.headers[kTimingHeader] = fmt::format("{:.3f}", outcome.timing.total_ms);
    return res;
  }

  // category: absent, or an integer 1..7.
  ApiResponse catalog_search(std::optional<std::string_view> category, std::string_view q) const {
    int cat = 0;
    if (category) {
      const auto v = detail::to_int(detail::trim_ws(*category));
      if (!v || *v < 1 || *v > 7) return detail::error_response(400, "category must be an integer in 1..7");
      cat = *v;
    }
    nlohmann::json list = nlohmann::json::array();
    for (const auto* m : catalog_.search(cat, q)) list.push_back(detail::meta_json(*m));
    return detail::json_response(200, list);
  }

  ApiResponse create_document(std::string_view body) {
    return with_swml(body, [&](SwmlDocument doc) {
      const auto id = store_.create(std::move(doc));
      return detail::json_response(201, detail::record_json(store_.get(id)));
    });
  }

  ApiResponse put_document(const std::string& id, std::string_view body) {
    return with_swml(body, [&](SwmlDocument doc) {
      return detail::json_response(200, detail::record_json(store_.replace(id, std::move(doc))));
    });
  }

  ApiResponse finalize_document(const std::string& id) {
    return guarded([&] { return detail::json_response(200, detail::record_json(store_.finalize(id))); });
  }

  ApiResponse get_document(const std::string& id) const {
    return guarded([&] { return detail::json_response(200, detail::record_json(store_.get(id))); });
  }

 private:
  template <class F>
  static ApiResponse guarded(F&& f) {
    try {
      return f();
    } catch (const UnknownDocument& e) {
      return detail::error_response(404, e.what());
    } catch (const DocumentFinalized& e) {
      return detail::error_response(409, e.what());
    } catch (const SchemaViolation& e) {
      return detail::error_response(422, e.what());
    } catch (const StoreError& e) {
      return detail::error_response(500, e.what());
    }
  }

  // Accepts either the SWML JSON object itself or a record-shaped
  // {"swml": {...}} wrapper, so a GET response can be sent back unchanged.
  template <class F>
  static ApiResponse with_swml(std::string_view body, F&& f) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      return detail::error_response(400, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) return detail::error_response(400, "expected a JSON object");
    const nlohmann::json& doc = j.contains("swml") ? j.at("swml") : j;
    return guarded([&] { return f(swml_from_json(doc)); });
  }

  ServiceOptions opts_;
  SymbolCatalog catalog_;
  mutable DocumentStore store_;
};

}  // namespace swogr
