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

#include "painworth/domain.hpp"

// Portfolio file formats.
//
// JSON (canonical):
//   {"id", "currency", "agents": [{"id", "label", "beneficiary", "side"}],
//    "pains": [{"id", "kind", "description",
//               "lines": [{"agent", "frequency", "impact", "alleviation", "note",
//                          "confusion"?, "investment"?}]}],
//    "cost_model"?: {"development", "annual_operation", "amortization_years"},
//    "pricing": {"revenue_share"}}
// Money is always a decimal string ("50.00"). Frequencies, alleviation and
// shares are written as strings and accepted as strings or numbers.
//
// CSV: '#' directive lines carry the portfolio header, then one row per
// impact line:
//   # id: demo
//   # currency: EUR
//   # agent: customer | Agent of Customer | customer | beneficiary
//   # cost_model: development=0.00, annual_operation=0.00, amortization_years=1
//   # pricing: revenue_share=0.5
//   pain_id,kind,description,agent,frequency_per_year,impact,alleviation,note
// CSV carries resolved alleviation factors only, not line annotations.

namespace painworth {

enum class PortfolioFormat { Json, Csv };

std::optional<PortfolioFormat> parse_portfolio_format(std::string_view text);

/// Structured parse followed by validate_portfolio(). Syntax problems are
/// reported as SyntaxError issues with a line/column or field locus.
ValidationResult parse_portfolio(std::string_view bytes, PortfolioFormat format);

/// Same as parse_portfolio for an already parsed JSON document.
ValidationResult portfolio_from_json(const nlohmann::json& doc);

nlohmann::ordered_json portfolio_to_json(const Portfolio& p);

/// Canonical text form; parse_portfolio of the result yields `p` again.
std::string serialize_portfolio(const Portfolio& p, PortfolioFormat format);

/// Reads a decimal from a JSON string or number. Used for API parameters.
std::optional<Decimal> json_decimal(const nlohmann::json& value);

}  // namespace painworth
