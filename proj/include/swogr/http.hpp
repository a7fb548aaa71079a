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

// Routes of the HTTP service, bound onto a cpp-httplib server.

#include <string>

#include <httplib.h>

#include "swogr/service.hpp"

namespace swogr {

namespace detail {

inline void send(httplib::Response& res, const ApiResponse& api) {
  res.status = api.status;
  for (const auto& [k, v] : api.headers) res.set_header(k, v);
  res.set_content(api.body, "application/json");
}

}  // namespace detail

inline void mount_routes(httplib::Server& server, Service& svc) {
  server.Post("/recognize", [&svc](const httplib::Request& req, httplib::Response& res) {
    const bool timing = req.has_param("timing") && req.get_param_value("timing") == "1";
    const std::string name = req.has_param("name") ? req.get_param_value("name") : std::string{};
    detail::send(res, svc.recognize(req.get_header_value("Content-Type"), req.body, name, timing));
  });
  server.Get("/catalog", [&svc](const httplib::Request& req, httplib::Response& res) {
    std::optional<std::string> category;
    if (req.has_param("category")) category = req.get_param_value("category");
    const std::string q = req.has_param("q") ? req.get_param_value("q") : std::string{};
    detail::send(res, svc.catalog_search(category ? std::optional<std::string_view>(*category) : std::nullopt, q));
  });
  server.Post("/documents", [&svc](const httplib::Request& req, httplib::Response& res) {
    detail::send(res, svc.create_document(req.body));
  });
  server.Post(R"(/documents/([a-z2-7]+)/finalize)", [&svc](const httplib::Request& req, httplib::Response& res) {
    detail::send(res, svc.finalize_document(req.matches[1]));
  });
  server.Put(R"(/documents/([a-z2-7]+))", [&svc](const httplib::Request& req, httplib::Response& res) {
    detail::send(res, svc.put_document(req.matches[1], req.body));
  });
  server.Get(R"(/documents/([a-z2-7]+))", [&svc](const httplib::Request& req, httplib::Response& res) {
    detail::send(res, svc.get_document(req.matches[1]));
  });
  server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      if (ep) std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    detail::send(res, detail::error_response(500, what));
  });
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) detail::send(res, detail::error_response(res.status, "no such route"));
  });
}

}  // namespace swogr
