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
// HTTP service for live stroke recognition, catalog search and document
// persistence. Listens until SIGINT/SIGTERM.

#include <csignal>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "swogr/cli.hpp"
#include "swogr/http.hpp"

namespace {

httplib::Server* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"swogr_service: HTTP front end of the glyph recognizer", "swogr_service"};
  std::string host = "127.0.0.1";
  int port = 8080;
  swogr::ServiceOptions opts;
  std::string store = opts.store.string();
  swogr::detail::CommonOptions common;
  app.add_option("--host", host, "bind address");
  app.add_option("--port", port, "listen port (0 picks a free one)")->check(CLI::Range(0, 65535));
  app.add_option("--store", store, "directory for finalized documents");
  app.add_option("--max-width", opts.max_width, "largest accepted image width")->check(CLI::PositiveNumber);
  app.add_option("--max-height", opts.max_height, "largest accepted image height")->check(CLI::PositiveNumber);
  common.attach(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : swogr::kExitUsage;
  }

  try {
    opts.store = store;
    opts.config = common.config();
    swogr::Service svc(opts, common.catalog());
    httplib::Server server;
    server.set_payload_max_length(64u << 20);
    swogr::mount_routes(server, svc);

    g_server = &server;
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);

    const int bound = port == 0 ? server.bind_to_any_port(host) : (server.bind_to_port(host, port) ? port : -1);
    if (bound < 0) {
      std::cerr << "swogr_service: cannot bind " << host << ":" << port << "\n";
      return swogr::kExitUsage;
    }
    // Tests read this line to learn the port.
    std::cout << "listening on " << host << ":" << bound << std::endl;
    server.listen_after_bind();
  } catch (const swogr::detail::CliError& e) {
    std::cerr << "swogr_service: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "swogr_service: " << e.what() << "\n";
    return swogr::kExitUsage;
  }
  return 0;
}
