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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace painworth {

enum class Errc {
  // input syntax
  SyntaxError,
  MissingField,
  // portfolio validation
  OmegaOutOfRange,
  NegativeFrequency,
  NegativeImpact,
  UnknownAgent,
  DuplicatePainId,
  DuplicateAgentId,
  DuplicateAgentLine,
  EmptyLines,
  InvalidPainId,
  CurrencyMismatch,
  NoBeneficiary,
  InvalidCostModel,
  ShareOutOfRange,
  InvalidAnnotation,
  ValidationFailed,
  // analysis
  NoPositives,
  Unreachable,
  PathNotFound,
  DomainViolation,
  ZeroValuePortfolio,
  Overflow,
  InvalidArgument,
  // storage
  NotFound,
  StorageFull,
  ConcurrentWriteConflict,
  IoError,
};

/// Stable machine-readable name, e.g. "OmegaOutOfRange".
std::string_view errc_name(Errc code) noexcept;

/// One violation found while checking input. `locus` names the offending
/// field ("pains[0].lines[1].alleviation", "row 4, column impact").
struct Issue {
  Errc code;
  std::string locus;
  std::string message;

  std::string to_string() const;
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  /// Aggregate failure carrying every issue found; code is ValidationFailed.
  explicit Error(std::vector<Issue> issues);

  Errc code() const noexcept { return code_; }
  const std::vector<Issue>& issues() const noexcept { return issues_; }

 private:
  Errc code_;
  std::vector<Issue> issues_;
};

}  // namespace painworth
