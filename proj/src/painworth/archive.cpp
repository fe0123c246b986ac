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

#include "painworth/archive.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "painworth/portfolio_io.hpp"
#include "painworth/report.hpp"

namespace painworth {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kSuffix = ".json";

[[noreturn]] void throw_errno(const std::string& what, int err) {
  if (err == ENOSPC || err == EDQUOT) throw Error(Errc::StorageFull, what + ": " + std::strerror(err));
  throw Error(Errc::IoError, what + ": " + std::strerror(err));
}

class Fd {
 public:
  explicit Fd(int fd) : fd_(fd) {}
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  ~Fd() {
    if (fd_ >= 0) ::close(fd_);
  }
  int get() const { return fd_; }
  int release() {
    int fd = fd_;
    fd_ = -1;
    return fd;
  }

 private:
  int fd_;
};

// Advisory whole-file lock; serialises writers across processes.
class FileLock {
 public:
  explicit FileLock(const fs::path& path) : fd_(::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644)) {
    if (fd_.get() < 0) throw_errno("cannot open lock " + path.string(), errno);
    while (::flock(fd_.get(), LOCK_EX) != 0) {
      if (errno != EINTR) throw_errno("cannot lock " + path.string(), errno);
    }
  }
  ~FileLock() { ::flock(fd_.get(), LOCK_UN); }

 private:
  Fd fd_;
};

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_all(int fd, std::string_view data, const fs::path& path) {
  while (!data.empty()) {
    ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      throw_errno("cannot write " + path.string(), errno);
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

StoredPortfolio decode(const std::string& bytes, std::string_view id) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::exception&) {
    throw Error(Errc::IoError, "stored document for '" + std::string(id) + "' is not valid JSON");
  }
  if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_number_unsigned() ||
      !doc.contains("portfolio")) {
    throw Error(Errc::IoError, "stored document for '" + std::string(id) + "' is malformed");
  }
  auto result = portfolio_from_json(doc["portfolio"]);
  if (!result.ok()) {
    throw Error(Errc::IoError, "stored portfolio '" + std::string(id) + "' no longer validates");
  }
  return {*result.portfolio, doc["version"].get<std::uint64_t>()};
}

std::atomic<std::uint64_t> temp_counter{0};

}  // namespace

ScenarioArchive::ScenarioArchive(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  if (!fs::is_directory(root_, ec)) {
    throw Error(Errc::IoError, "data directory '" + root_.string() + "' does not exist");
  }
  if (::access(root_.c_str(), W_OK) != 0) {
    throw Error(Errc::IoError, "data directory '" + root_.string() + "' is not writable");
  }
}

std::string ScenarioArchive::escape_id(std::string_view id) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : id) {
    if (std::isalnum(c) || c == '_' || c == '-') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 0xF];
    }
  }
  return out;
}

std::optional<std::string> ScenarioArchive::unescape_id(std::string_view name) {
  auto hex = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name[i] != '%') {
      out += name[i];
      continue;
    }
    if (i + 2 >= name.size()) return std::nullopt;
    int hi = hex(name[i + 1]), lo = hex(name[i + 2]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out += static_cast<char>(hi * 16 + lo);
    i += 2;
  }
  return out;
}

std::string ScenarioArchive::document_for(const Portfolio& p, std::uint64_t version) {
  nlohmann::ordered_json doc;
  doc["version"] = version;
  doc["portfolio"] = portfolio_to_json(p);
  return dump_json(doc);
}

fs::path ScenarioArchive::path_for(std::string_view id) const {
  if (id.empty()) throw Error(Errc::InvalidArgument, "portfolio id is empty");
  return root_ / (escape_id(id) + std::string(kSuffix));
}

std::shared_ptr<std::mutex> ScenarioArchive::writer_mutex(const std::string& id) {
  std::lock_guard guard(table_mutex_);
  auto& slot = writer_mutexes_[id];
  if (!slot) slot = std::make_shared<std::mutex>();
  return slot;
}

std::uint64_t ScenarioArchive::save(const Portfolio& p, std::uint64_t expected_version) {
  const fs::path target = path_for(p.id);
  auto mutex = writer_mutex(p.id);
  std::lock_guard guard(*mutex);
  FileLock lock(root_ / ("." + escape_id(p.id) + ".lock"));

  std::uint64_t current = 0;
  if (auto bytes = read_file(target)) current = decode(*bytes, p.id).version;
  if (expected_version != current) {
    if (current == 0) throw Error(Errc::NotFound, "portfolio '" + p.id + "' does not exist");
    throw Error(Errc::ConcurrentWriteConflict,
                "portfolio '" + p.id + "' is at version " + std::to_string(current) +
                    ", write was based on version " + std::to_string(expected_version));
  }

  const std::uint64_t next = current + 1;
  const std::string doc = document_for(p, next);
  const fs::path temp = root_ / ("." + escape_id(p.id) + ".tmp." + std::to_string(::getpid()) + "." +
                                 std::to_string(temp_counter.fetch_add(1)));
  {
    Fd fd(::open(temp.c_str(), O_WRONLY | O_CREAT | O_EXCL | O_CLOEXEC, 0644));
    if (fd.get() < 0) throw_errno("cannot create " + temp.string(), errno);
    try {
      write_all(fd.get(), doc, temp);
      if (::fsync(fd.get()) != 0) throw_errno("cannot sync " + temp.string(), errno);
    } catch (...) {
      ::unlink(temp.c_str());
      throw;
    }
  }
  if (::rename(temp.c_str(), target.c_str()) != 0) {
    int err = errno;
    ::unlink(temp.c_str());
    throw_errno("cannot replace " + target.string(), err);
  }
  return next;
}

std::string ScenarioArchive::load_document(std::string_view id) const {
  auto bytes = read_file(path_for(id));
  if (!bytes) throw Error(Errc::NotFound, "portfolio '" + std::string(id) + "' not found");
  return *bytes;
}

StoredPortfolio ScenarioArchive::load(std::string_view id) const { return decode(load_document(id), id); }

bool ScenarioArchive::exists(std::string_view id) const {
  std::error_code ec;
  return fs::is_regular_file(path_for(id), ec);
}

std::vector<std::string> ScenarioArchive::list() const {
  std::vector<std::string> ids;
  for (const auto& entry : fs::directory_iterator(root_)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (name.empty() || name[0] == '.' || !name.ends_with(kSuffix)) continue;
    if (auto id = unescape_id(std::string_view(name).substr(0, name.size() - kSuffix.size()))) {
      ids.push_back(*id);
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

void ScenarioArchive::remove(std::string_view id, std::optional<std::uint64_t> expected_version) {
  const fs::path target = path_for(id);
  const std::string key(id);
  auto mutex = writer_mutex(key);
  std::lock_guard guard(*mutex);
  FileLock lock(root_ / ("." + escape_id(id) + ".lock"));
  auto bytes = read_file(target);
  if (!bytes) throw Error(Errc::NotFound, "portfolio '" + key + "' not found");
  if (expected_version && decode(*bytes, id).version != *expected_version) {
    throw Error(Errc::ConcurrentWriteConflict, "portfolio '" + key + "' changed since it was read");
  }
  if (::unlink(target.c_str()) != 0) throw_errno("cannot delete " + target.string(), errno);
}

}  // namespace painworth
