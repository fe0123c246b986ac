// Copyright 2026 The painworth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "painworth/domain.hpp"

namespace painworth {

struct StoredPortfolio {
  Portfolio portfolio;
  std::uint64_t version = 0;
};

/// Directory of portfolio documents, one file per id:
///
///   <root>/<escaped id>.json   {"version": n, "portfolio": {...canonical...}}
///
/// Writes go to a temporary file that is renamed over the target, so readers
/// see either the old or the new document. Writers to one id are serialised
/// (in-process mutex plus an advisory file lock) and use optimistic version
/// checks; a stale version is rejected rather than overwritten.
class ScenarioArchive {
 public:
  /// Throws Error(IoError) unless `root` is an existing writable directory.
  explicit ScenarioArchive(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  /// Stores `p` under p.id. `expected_version` is 0 for a new document,
  /// otherwise the version the caller last read. Returns the new version.
  /// Throws NotFound, ConcurrentWriteConflict, StorageFull or IoError.
  std::uint64_t save(const Portfolio& p, std::uint64_t expected_version);

  /// Throws Error(NotFound).
  StoredPortfolio load(std::string_view id) const;

  /// Raw stored document bytes. Throws Error(NotFound).
  std::string load_document(std::string_view id) const;

  bool exists(std::string_view id) const;

  /// Ids in lexical order.
  std::vector<std::string> list() const;

  /// Deletes the document; when `expected_version` is set it must match.
  void remove(std::string_view id, std::optional<std::uint64_t> expected_version = std::nullopt);

  /// File name for an id: [A-Za-z0-9_-] kept, every other byte as %XX.
  static std::string escape_id(std::string_view id);
  static std::optional<std::string> unescape_id(std::string_view name);

  /// Canonical stored bytes for a portfolio at a version.
  static std::string document_for(const Portfolio& p, std::uint64_t version);

 private:
  std::filesystem::path path_for(std::string_view id) const;
  std::shared_ptr<std::mutex> writer_mutex(const std::string& id);

  std::filesystem::path root_;
  std::mutex table_mutex_;
  std::map<std::string, std::shared_ptr<std::mutex>> writer_mutexes_;
};

}  // namespace painworth
