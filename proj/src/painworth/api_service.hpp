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

#include <filesystem>
#include <memory>
#include <string>

#include "painworth/archive.hpp"

// HTTP/JSON service over the archive and the analysis modules.
//
//   GET    /api/portfolios                      ids with versions
//   POST   /api/portfolios                      create, 201
//   GET    /api/portfolios/{id}                 {"id", "version", "portfolio"}
//   PUT    /api/portfolios/{id}                 {"version", "portfolio"}; stale version -> 409
//   DELETE /api/portfolios/{id}[?version=n]     204
//   POST   /api/portfolios/{id}/evaluate        optional overrides body
//   POST   /api/portfolios/{id}/gate            targets body
//   GET    /api/portfolios/{id}/sweep?path&from&to&steps
//   GET    /api/portfolios/{id}/tornado?rel
//   GET    /api/portfolios/{id}/breakeven[?cost]
//   POST   /api/whatif                          base_id or inline portfolio plus overrides
//   POST   /api/rank                            ideas ranked by net value
//
// Errors are {"error": {"code", "message", "issues"?, "path"?}} where code is
// the error taxonomy name. There is no authentication; bind to loopback
// unless the network is trusted.

namespace painworth {

class ApiServer {
 public:
  /// Throws Error(IoError) unless `data_dir` is a writable directory.
  explicit ApiServer(const std::filesystem::path& data_dir);
  ~ApiServer();

  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  /// Binds and starts serving on a background thread. Port 0 picks a free
  /// port. Returns the bound port; throws Error(IoError) when binding fails.
  int start(const std::string& host, int port);

  int port() const;

  /// Stops accepting requests and joins the worker. Idempotent.
  void stop();

  ScenarioArchive& archive();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace painworth
