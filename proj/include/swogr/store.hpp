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

// File-backed document store. Drafts live in memory; finalizing writes the
// canonical SWML to <dir>/<doc_id>.swml and rewrites <dir>/index.tsv, both
// via temp file + rename. No authentication: ids are unguessable, not secret.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <vector>

#include "swogr/error.hpp"
#include "swogr/image_io.hpp"
#include "swogr/swml.hpp"

namespace swogr {

enum class DocStatus { draft, finalized };

inline const char* status_name(DocStatus s) noexcept { return s == DocStatus::draft ? "draft" : "finalized"; }

struct DocumentRecord {
  std::string doc_id;
  SwmlDocument swml;
  DocStatus status = DocStatus::draft;
  std::string created;
  std::string updated;
};

class UnknownDocument : public Error {
 public:
  explicit UnknownDocument(const std::string& id) : Error("unknown document: " + id) {}
};

class DocumentFinalized : public Error {
 public:
  explicit DocumentFinalized(const std::string& id) : Error("document is finalized: " + id) {}
};

class StoreError : public Error {
 public:
  using Error::Error;
};

inline constexpr const char* kIndexFile = "index.tsv";

// RFC 4648 alphabet, lowercase, unpadded: 128 bits -> 26 chars.
inline std::string base32_encode(const std::uint8_t* data, std::size_t n) {
  static constexpr char alphabet[] = "abcdefghijklmnopqrstuvwxyz234567";
  std::string out;
  std::uint32_t buffer = 0;
  int bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    buffer = (buffer << 8) | data[i];
    bits += 8;
    while (bits >= 5) {
      out += alphabet[(buffer >> (bits - 5)) & 31];
      bits -= 5;
    }
  }
  if (bits > 0) out += alphabet[(buffer << (5 - bits)) & 31];
  return out;
}

inline std::string new_doc_id() {
  static thread_local std::random_device rd;
  std::uint8_t bytes[16];
  for (int i = 0; i < 16; i += 4) {
    const std::uint32_t v = rd();
    for (int k = 0; k < 4; ++k) bytes[i + k] = static_cast<std::uint8_t>(v >> (8 * k));
  }
  return base32_encode(bytes, sizeof bytes);
}

inline bool plausible_doc_id(std::string_view id) noexcept {
  if (id.size() != 26) return false;
  for (char c : id)
    if (!((c >= 'a' && c <= 'z') || (c >= '2' && c <= '7'))) return false;
  return true;
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Write to a sibling temp file, then rename over the target.
inline void atomic_write(const std::filesystem::path& target, std::string_view bytes) {
  static std::atomic<unsigned> counter{0};
  auto tmp = target;
  tmp += ".tmp" + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw StoreError("cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw StoreError("cannot rename into " + target.string());
  }
}

class DocumentStore {
 public:
  // Opens (creating if needed) the store directory and reloads finalized
  // documents listed in the index.
  explicit DocumentStore(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (!std::filesystem::is_directory(dir_)) throw StoreError("store is not a directory: " + dir_.string());
    load_index();
  }

  const std::filesystem::path& directory() const noexcept { return dir_; }

  std::string create(SwmlDocument doc) {
    validate(doc);
    auto e = std::make_shared<Entry>();
    e->record.swml = std::move(doc);
    e->record.created = e->record.updated = utc_timestamp();
    std::unique_lock lock(map_mutex_);
    std::string id;
    do id = new_doc_id();
    while (entries_.count(id));
    e->record.doc_id = id;
    entries_.emplace(id, std::move(e));
    return id;
  }

  DocumentRecord get(const std::string& id) const {
    auto e = entry(id);
    std::lock_guard lock(e->mutex);
    return e->record;
  }

  // Last writer wins; each replacement is whole under the per-id lock.
  DocumentRecord replace(const std::string& id, SwmlDocument doc) {
    validate(doc);
    auto e = entry(id);
    std::lock_guard lock(e->mutex);
    if (e->record.status == DocStatus::finalized) throw DocumentFinalized(id);
    e->record.swml = std::move(doc);
    e->record.updated = utc_timestamp();
    return e->record;
  }

  DocumentRecord finalize(const std::string& id) {
    auto e = entry(id);
    std::lock_guard lock(e->mutex);
    if (e->record.status == DocStatus::finalized) throw DocumentFinalized(id);
    atomic_write(dir_ / (id + ".swml"), swml_serialize(e->record.swml));
    e->record.status = DocStatus::finalized;
    e->record.updated = utc_timestamp();
    write_index(e->record);
    return e->record;
  }

  std::size_t size() const {
    std::shared_lock lock(map_mutex_);
    return entries_.size();
  }

 private:
  struct Entry {
    mutable std::mutex mutex;
    DocumentRecord record;
  };

  std::shared_ptr<Entry> entry(const std::string& id) const {
    std::shared_lock lock(map_mutex_);
    auto it = entries_.find(id);
    if (it == entries_.end()) throw UnknownDocument(id);
    return it->second;
  }

  // Lock order: entry, then index.
  void write_index(const DocumentRecord& r) {
    std::lock_guard ilock(index_mutex_);
    index_[r.doc_id] = r.created + "\t" + r.updated;
    std::string text;
    for (const auto& [id, times] : index_) text += id + "\t" + times + "\n";
    atomic_write(dir_ / kIndexFile, text);
  }

  void load_index() {
    const auto path = dir_ / kIndexFile;
    if (!std::filesystem::exists(path)) return;
    std::ifstream in(path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      std::istringstream fields(line);
      std::string id, created, updated;
      std::getline(fields, id, '\t');
      std::getline(fields, created, '\t');
      std::getline(fields, updated, '\t');
      if (!plausible_doc_id(id)) throw StoreError("index line " + std::to_string(lineno) + ": bad id");
      const auto bytes = read_file_bytes(dir_ / (id + ".swml"));
      auto e = std::make_shared<Entry>();
      e->record = {id, swml_parse(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size())),
                   DocStatus::finalized, created, updated};
      index_[id] = created + "\t" + updated;
      entries_.emplace(id, std::move(e));
    }
  }

  std::filesystem::path dir_;
  mutable std::shared_mutex map_mutex_;
  std::mutex index_mutex_;
  std::map<std::string, std::shared_ptr<Entry>> entries_;
  std::map<std::string, std::string> index_;  // finalized ids -> "created\tupdated"
};

}  // namespace swogr
