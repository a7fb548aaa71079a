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
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>
#include <httplib.h>

#include "support/fixtures.hpp"
#include "support/process.hpp"
#include "swogr/http.hpp"
#include "swogr/swogr.hpp"

namespace {

using nlohmann::json;

std::string circle_body(int cx = 100, int cy = 100, int r = 30) {
  swogr::StrokeSet set;
  set.width = set.height = 256;
  std::vector<swogr::Point> pts;
  for (int i = 0; i <= 72; ++i) {
    const double a = i * std::numbers::pi / 36;
    pts.push_back({static_cast<int>(std::lround(cx + r * std::cos(a))), static_cast<int>(std::lround(cy + r * std::sin(a)))});
  }
  set.strokes.push_back(pts);
  return swogr::strokes_to_json(set).dump();
}

std::string as_text(const std::vector<std::uint8_t>& b) { return {b.begin(), b.end()}; }

swogr::SwmlDocument small_doc() {
  swogr::SwmlDocument d;
  d.source = {"page.png", 300, 200};
  d.signboxes.push_back({1, {10, 10, 80, 80}, {{swogr::IswaCode{4, 1, 1, 1, 1, 1}, {5, 5, 60, 60}, 0.93}}});
  return d;
}

class ServiceTest : public ::testing::Test {
 protected:
  fixture::TempDir tmp;
  swogr::Service svc{make_options(), swogr::default_catalog()};

  swogr::ServiceOptions make_options() {
    swogr::ServiceOptions o;
    o.store = tmp / "store";
    o.max_width = 1700;
    o.max_height = 1700;
    return o;
  }
};

}  // namespace

TEST_F(ServiceTest, CircleStrokesGiveAHead) {
  const auto res = svc.recognize("application/json", circle_body());
  ASSERT_EQ(res.status, 200) << res.body;
  const auto j = json::parse(res.body);
  EXPECT_EQ(j.at("glyphs"), 1);
  EXPECT_EQ(j.at("unrecognized"), 0);
  const auto doc = swogr::swml_from_json(j.at("swml"));
  ASSERT_EQ(doc.signboxes.size(), 1u);
  EXPECT_EQ(doc.signboxes[0].glyphs[0].code.category, 4);
  EXPECT_EQ(doc.source.image, "strokes");
  EXPECT_FALSE(j.contains("ms"));
  EXPECT_TRUE(res.headers.count(swogr::kTimingHeader));
}

TEST_F(ServiceTest, IdenticalBodiesIdenticalResponses) {
  const auto a = svc.recognize("application/json; charset=utf-8", circle_body());
  const auto b = svc.recognize("Application/JSON", circle_body());
  EXPECT_EQ(a.status, 200);
  EXPECT_EQ(a.body, b.body);
  const auto timed = svc.recognize("application/json", circle_body(), {}, true);
  EXPECT_TRUE(json::parse(timed.body).at("ms").is_number());
}

TEST_F(ServiceTest, EmptyStrokesAre422) {
  EXPECT_EQ(svc.recognize("application/json", R"({"canvas":{"w":100,"h":100},"strokes":[]})").status, 422);
  // strokes that miss the canvas are not EmptyInk: they just find nothing
  const auto off = svc.recognize("application/json", R"({"canvas":{"w":100,"h":100},"strokes":[[[500,500]]]})");
  EXPECT_EQ(off.status, 200);
  EXPECT_EQ(json::parse(off.body).at("glyphs"), 0);
}

TEST_F(ServiceTest, MalformedRequestsAre400) {
  EXPECT_EQ(svc.recognize("application/json", "{not json").status, 400);
  EXPECT_EQ(svc.recognize("application/json", R"({"strokes":[]})").status, 400);
  EXPECT_EQ(svc.recognize("application/json", R"({"canvas":{"w":10,"h":10},"strokes":[[[1.5,2]]]})").status, 400);
  EXPECT_EQ(svc.recognize("image/png", "definitely not a png").status, 400);
  EXPECT_EQ(svc.recognize("text/plain", "hello").status, 400);
  const auto res = svc.recognize("application/json", "[]");
  EXPECT_EQ(res.status, 400);
  EXPECT_TRUE(json::parse(res.body).contains("error"));
}

TEST_F(ServiceTest, OversizeIs413) {
  EXPECT_EQ(svc.recognize("application/json", R"({"canvas":{"w":5000,"h":10},"strokes":[]})").status, 413);
  swogr::GrayImage wide(2000, 10, 255);
  EXPECT_EQ(svc.recognize("image/png", as_text(swogr::encode_png(wide))).status, 413);
  EXPECT_EQ(svc.recognize("image/x-portable-graymap", as_text(swogr::encode_pgm(wide))).status, 413);
}

TEST_F(ServiceTest, ImageUploadMatchesLibrary) {
  const auto& cat = swogr::default_catalog();
  const auto page = fixture::compose(fixture::all_variants(cat), 1.0);
  const auto png = as_text(swogr::encode_png(page.image));
  const auto res = svc.recognize("image/png", png, "page.png");
  ASSERT_EQ(res.status, 200);
  const auto want = swogr::to_document(swogr::recognize_page(page.image, cat), "page.png");
  EXPECT_EQ(swogr::swml_from_json(json::parse(res.body).at("swml")), want);
}

TEST_F(ServiceTest, CatalogSearch) {
  const auto heads = json::parse(svc.catalog_search("4", "").body);
  ASSERT_FALSE(heads.empty());
  for (const auto& m : heads) EXPECT_EQ(m.at("category"), 4);
  const auto idx = json::parse(svc.catalog_search(std::nullopt, "INDEX").body);
  ASSERT_EQ(idx.size(), 1u);
  EXPECT_EQ(idx[0].at("code"), "01-01-001-01-01-01");
  EXPECT_EQ(idx[0].at("primitive"), "square_with_finger");
  EXPECT_EQ(json::parse(svc.catalog_search(std::nullopt, "").body).size(), swogr::default_catalog().size());
  EXPECT_EQ(svc.catalog_search("0", "").status, 400);
  EXPECT_EQ(svc.catalog_search("8", "").status, 400);
  EXPECT_EQ(svc.catalog_search("x", "").status, 400);
}

TEST_F(ServiceTest, DocumentLifecycle) {
  const auto created = svc.create_document(swogr::to_json(small_doc()).dump());
  ASSERT_EQ(created.status, 201) << created.body;
  const auto rec = json::parse(created.body);
  const std::string id = rec.at("doc_id");
  EXPECT_EQ(rec.at("status"), "draft");

  auto edited = small_doc();
  edited.signboxes[0].glyphs[0].code = swogr::IswaCode{1, 10, 1, 1, 1, 1};
  // a GET-shaped record is accepted back unchanged
  json wrapper = json::parse(svc.get_document(id).body);
  wrapper["swml"] = swogr::to_json(edited);
  EXPECT_EQ(svc.put_document(id, wrapper.dump()).status, 200);
  EXPECT_EQ(swogr::swml_from_json(json::parse(svc.get_document(id).body).at("swml")), edited);

  const auto fin = svc.finalize_document(id);
  ASSERT_EQ(fin.status, 200);
  EXPECT_EQ(json::parse(fin.body).at("status"), "finalized");
  EXPECT_EQ(proc::slurp(tmp / "store" / (id + ".swml")), swogr::swml_serialize(edited));
  EXPECT_EQ(svc.put_document(id, swogr::to_json(small_doc()).dump()).status, 409);
  EXPECT_EQ(svc.finalize_document(id).status, 409);
}

TEST_F(ServiceTest, DocumentErrors) {
  EXPECT_EQ(svc.get_document("aaaaaaaaaaaaaaaaaaaaaaaaaa").status, 404);
  EXPECT_EQ(svc.put_document("aaaaaaaaaaaaaaaaaaaaaaaaaa", swogr::to_json(small_doc()).dump()).status, 404);
  EXPECT_EQ(svc.finalize_document("aaaaaaaaaaaaaaaaaaaaaaaaaa").status, 404);
  EXPECT_EQ(svc.create_document("{oops").status, 400);
  EXPECT_EQ(svc.create_document("42").status, 400);
  auto bad = swogr::to_json(small_doc());
  bad["signboxes"][0]["w"] = 1000;  // outside the page
  EXPECT_EQ(svc.create_document(bad.dump()).status, 422);
  EXPECT_EQ(svc.create_document(R"({"version":"1.0"})").status, 422);
}

TEST(ServiceHttp, RoutesOverTheWire) {
  fixture::TempDir tmp;
  proc::Server server({SWOGR_SERVICE_PATH, "--port", "0", "--store", (tmp / "store").string()});
  httplib::Client client("127.0.0.1", server.port());

  auto res = client.Post("/recognize", circle_body(), "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Content-Type").rfind("application/json", 0), 0u);
  EXPECT_TRUE(res->has_header(swogr::kTimingHeader));
  EXPECT_EQ(json::parse(res->body).at("glyphs"), 1);

  res = client.Post("/recognize?timing=1&name=pad.json", circle_body(), "application/json");
  ASSERT_TRUE(res);
  const auto j = json::parse(res->body);
  EXPECT_TRUE(j.contains("ms"));
  EXPECT_EQ(j.at("swml").at("source").at("image"), "pad.json");

  res = client.Post("/recognize", R"({"canvas":{"w":64,"h":64},"strokes":[]})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 422);

  res = client.Get("/catalog?category=4&q=head");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_FALSE(json::parse(res->body).empty());
  res = client.Get("/catalog?category=9");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);

  res = client.Post("/documents", swogr::to_json(small_doc()).dump(), "application/json");
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 201);
  const std::string id = json::parse(res->body).at("doc_id");
  res = client.Put("/documents/" + id, swogr::to_json(small_doc()).dump(), "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  res = client.Post("/documents/" + id + "/finalize", "", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  res = client.Put("/documents/" + id, swogr::to_json(small_doc()).dump(), "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 409);
  res = client.Get("/documents/" + id);
  ASSERT_TRUE(res);
  EXPECT_EQ(json::parse(res->body).at("status"), "finalized");
  res = client.Get("/documents/zzzzzzzzzzzzzzzzzzzzzzzzzz");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
  res = client.Get("/nowhere");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
  EXPECT_TRUE(json::parse(res->body).contains("error"));
  server.stop();

  // finalized documents survive a restart
  proc::Server again({SWOGR_SERVICE_PATH, "--port", "0", "--store", (tmp / "store").string()});
  httplib::Client c2("127.0.0.1", again.port());
  res = c2.Get("/documents/" + id);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
}
