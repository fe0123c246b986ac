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

#include "painworth/error.hpp"

namespace painworth {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::MissingField: return "MissingField";
    case Errc::OmegaOutOfRange: return "OmegaOutOfRange";
    case Errc::NegativeFrequency: return "NegativeFrequency";
    case Errc::NegativeImpact: return "NegativeImpact";
    case Errc::UnknownAgent: return "UnknownAgent";
    case Errc::DuplicatePainId: return "DuplicatePainId";
    case Errc::DuplicateAgentId: return "DuplicateAgentId";
    case Errc::DuplicateAgentLine: return "DuplicateAgentLine";
    case Errc::EmptyLines: return "EmptyLines";
    case Errc::InvalidPainId: return "InvalidPainId";
    case Errc::CurrencyMismatch: return "CurrencyMismatch";
    case Errc::NoBeneficiary: return "NoBeneficiary";
    case Errc::InvalidCostModel: return "InvalidCostModel";
    case Errc::ShareOutOfRange: return "ShareOutOfRange";
    case Errc::InvalidAnnotation: return "InvalidAnnotation";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::NoPositives: return "NoPositives";
    case Errc::Unreachable: return "Unreachable";
    case Errc::PathNotFound: return "PathNotFound";
    case Errc::DomainViolation: return "DomainViolation";
    case Errc::ZeroValuePortfolio: return "ZeroValuePortfolio";
    case Errc::Overflow: return "Overflow";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotFound: return "NotFound";
    case Errc::StorageFull: return "StorageFull";
    case Errc::ConcurrentWriteConflict: return "ConcurrentWriteConflict";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

std::string Issue::to_string() const {
  std::string out(errc_name(code));
  if (!locus.empty()) out += " at " + locus;
  if (!message.empty()) out += ": " + message;
  return out;
}

namespace {

std::string join_issues(const std::vector<Issue>& issues) {
  std::string out = "validation failed";
  for (const auto& issue : issues) out += "\n  " + issue.to_string();
  return out;
}

}  // namespace

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

Error::Error(std::vector<Issue> issues)
    : std::runtime_error(join_issues(issues)),
      code_(Errc::ValidationFailed),
      issues_(std::move(issues)) {}

}  // namespace painworth
