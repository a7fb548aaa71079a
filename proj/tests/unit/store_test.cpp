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
#include <set>
#include <thread>

#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/process.hpp"
#include "swogr/store.hpp"

namespace {

swogr::SwmlDocument doc(int boxes) {
  swogr::SwmlDocument d;
  d.source = {"page.png", 500, 500};
  for (int i = 1; i <= boxes; ++i)
    d.signboxes.push_back({i, {i * 10, 10, 50, 50}, {{swogr::IswaCode{4, 1, 1, 1, 1, 1}, {0, 0, 40, 40}, 0.9}}});
  return d;
}

std::set<std::string> listing(const std::filesystem::path& dir) {
  std::set<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(dir)) out.insert(e.path().filename().string());
  return out;
}

}  // namespace

TEST(DocId, Base32Of128Bits) {
  const auto id = swogr::new_doc_id();
  EXPECT_EQ(id.size(), 26u);
  EXPECT_TRUE(swogr::plausible_doc_id(id));
  EXPECT_NE(id, swogr::new_doc_id());
  const std::uint8_t f[] = {'f', 'o', 'o', 'b', 'a', 'r'};
  EXPECT_EQ(swogr::base32_encode(f, 6), "mzxw6ytboi");  // RFC 4648 test vector, unpadded
}

TEST(Store, CreateGetRoundTrip) {
  fixture::TempDir tmp;
  swogr::DocumentStore store(tmp.path());
  const auto id = store.create(doc(2));
  const auto rec = store.get(id);
  EXPECT_EQ(rec.doc_id, id);
  EXPECT_EQ(rec.swml, doc(2));
  EXPECT_EQ(rec.status, swogr::DocStatus::draft);
  EXPECT_EQ(rec.created.size(), 20u);
  EXPECT_TRUE(listing(tmp.path()).empty()) << "drafts are not persisted";
}

TEST(Store, ReplaceAndFinalize) {
  fixture::TempDir tmp;
  swogr::DocumentStore store(tmp.path());
  const auto id = store.create(doc(1));
  store.replace(id, doc(3));
  const auto rec = store.finalize(id);
  EXPECT_EQ(rec.status, swogr::DocStatus::finalized);
  EXPECT_EQ(proc::slurp(tmp / (id + ".swml")), swogr::swml_serialize(doc(3)));
  EXPECT_EQ(listing(tmp.path()), (std::set<std::string>{id + ".swml", swogr::kIndexFile}));
  EXPECT_THROW(store.replace(id, doc(1)), swogr::DocumentFinalized);
  EXPECT_THROW(store.finalize(id), swogr::DocumentFinalized);
}

TEST(Store, UnknownAndInvalid) {
  fixture::TempDir tmp;
  swogr::DocumentStore store(tmp.path());
  EXPECT_THROW(store.get("nope"), swogr::UnknownDocument);
  EXPECT_THROW(store.finalize("nope"), swogr::UnknownDocument);
  auto bad = doc(1);
  bad.signboxes[0].bbox.x = 490;
  EXPECT_THROW(store.create(bad), swogr::SchemaViolation);
}

TEST(Store, ReloadsFinalizedDocuments) {
  fixture::TempDir tmp;
  std::string done, draft;
  {
    swogr::DocumentStore store(tmp.path());
    done = store.create(doc(2));
    draft = store.create(doc(1));
    store.finalize(done);
  }
  swogr::DocumentStore again(tmp.path());
  EXPECT_EQ(again.size(), 1u);
  const auto rec = again.get(done);
  EXPECT_EQ(rec.status, swogr::DocStatus::finalized);
  EXPECT_EQ(rec.swml, doc(2));
  EXPECT_THROW(again.get(draft), swogr::UnknownDocument);
}

TEST(Store, ConcurrentWritersSerialize) {
  fixture::TempDir tmp;
  swogr::DocumentStore store(tmp.path());
  const auto id = store.create(doc(1));
  std::vector<std::string> others;
  for (int i = 0; i < 8; ++i) others.push_back(store.create(doc(1 + i % 4)));
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] {
      for (int k = 0; k < 50; ++k) store.replace(id, doc(1 + (t + k) % 5));
      store.finalize(others[static_cast<std::size_t>(t)]);
    });
  for (auto& th : threads) th.join();
  const auto final_rec = store.finalize(id);
  // whatever won, it is one complete document
  const auto on_disk = swogr::swml_parse(proc::slurp(tmp / (id + ".swml")));
  EXPECT_EQ(on_disk, final_rec.swml);
  EXPECT_EQ(listing(tmp.path()).size(), 10u);  // 9 documents + index
  swogr::DocumentStore again(tmp.path());
  EXPECT_EQ(again.size(), 9u);
}
