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

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "painworth/valuation.hpp"

namespace painworth {

enum class ReportFormat { Table, Markdown, Csv, Json };

std::optional<ReportFormat> parse_report_format(std::string_view text);

/// Lossless JSON form of an evaluation; money as ungrouped decimal strings.
/// The HTTP service and the CLI both emit exactly this document.
nlohmann::ordered_json evaluation_to_json(const Evaluation& e);

/// Serialises JSON the way every machine-readable output does (2-space
/// indent, trailing newline).
std::string dump_json(const nlohmann::ordered_json& doc);

/// Table and markdown group pains by kind with the subtotal row above its
/// pains and use apostrophe thousands grouping. CSV and JSON are ungrouped.
std::string render_report(const Evaluation& e, ReportFormat format);

}  // namespace painworth
