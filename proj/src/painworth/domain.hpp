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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "painworth/alleviation.hpp"
#include "painworth/error.hpp"
#include "painworth/money.hpp"
#include "painworth/quantities.hpp"

namespace painworth {

enum class PainKind { Operational, Structural };

std::string_view to_string(PainKind kind);
std::optional<PainKind> parse_pain_kind(std::string_view text);

/// Which side of the provider/customer relationship an agent sits on. Only
/// used to select the customer-only price ceiling.
enum class AgentSide { Customer, Provider };

std::string_view to_string(AgentSide side);
std::optional<AgentSide> parse_agent_side(std::string_view text);

struct Agent {
  std::string id;
  std::string label;
  bool beneficiary = true;
  AgentSide side = AgentSide::Customer;

  bool operator==(const Agent&) const = default;
};

/// Spend on an investment curve that produced a line's alleviation.
struct InvestmentAnnotation {
  InvestmentCurve curve;
  Money spend;

  bool operator==(const InvestmentAnnotation&) const = default;
};

/// One agent's share of a pain. `impact` is the cost of one occurrence,
/// stored as a positive amount.
struct ImpactLine {
  std::string agent;
  Rate frequency;
  Money impact;
  Alleviation alleviation;
  std::string note;
  std::optional<ConfusionCounts> confusion;
  std::optional<InvestmentAnnotation> investment;

  bool operator==(const ImpactLine&) const = default;
};

struct Pain {
  std::int64_t id = 0;
  PainKind kind = PainKind::Operational;
  std::string description;
  std::vector<ImpactLine> lines;

  bool operator==(const Pain&) const = default;
};

struct CostModel {
  Money development;
  Money annual_operation;
  std::int64_t amortization_years = 1;

  /// Throws Error(InvalidCostModel) for negative amounts or fewer than one
  /// amortization year, Error(CurrencyMismatch) for mixed currencies.
  static CostModel make(Money development, Money annual_operation, std::int64_t amortization_years);

  bool operator==(const CostModel&) const = default;
};

/// A validated service idea: pains, agents, optional cost model and pricing.
/// Only validate_portfolio() and the sensitivity patch functions produce
/// instances, so every invariant holds for any Portfolio in circulation.
struct Portfolio {
  std::string id;
  Currency currency;
  std::vector<Agent> agents;
  std::vector<Pain> pains;
  std::optional<CostModel> cost_model;
  PricingPolicy pricing;

  const Agent* find_agent(std::string_view agent_id) const;
  const Pain* find_pain(std::int64_t pain_id) const;

  bool operator==(const Portfolio&) const = default;
};

/// Copy of `p` keeping only pains of `kind`.
Portfolio filter_by_kind(const Portfolio& p, PainKind kind);

// Unvalidated input as produced by the file parsers. Every field may violate
// its domain; `locus` strings point back to the source for error reports.

struct RawInvestment {
  Decimal omega_max;
  Money kappa;
  Money spend;
};

struct RawLine {
  std::string locus;
  std::string agent;
  Decimal frequency;
  Money impact;
  std::optional<Decimal> alleviation;
  std::string note;
  std::optional<ConfusionCounts> confusion;
  std::optional<RawInvestment> investment;
};

struct RawPain {
  std::string locus;
  std::int64_t id = 0;
  PainKind kind = PainKind::Operational;
  std::string description;
  std::vector<RawLine> lines;
};

struct RawCostModel {
  std::string locus;
  Money development;
  Money annual_operation;
  std::int64_t amortization_years = 1;
};

struct RawAgent {
  std::string locus;
  Agent agent;
};

struct RawPortfolio {
  std::string id;
  Currency currency;
  std::vector<RawAgent> agents;
  std::vector<RawPain> pains;
  std::optional<RawCostModel> cost_model;
  Decimal revenue_share = Decimal::from_nanos(Decimal::kOne / 2);
  std::string pricing_locus = "pricing.revenue_share";
};

/// Either a valid portfolio or the complete, nonempty list of violations.
struct ValidationResult {
  std::optional<Portfolio> portfolio;
  std::vector<Issue> issues;

  bool ok() const { return portfolio.has_value(); }
  /// The portfolio, or throws Error carrying every issue.
  const Portfolio& value() const;
};

ValidationResult validate_portfolio(const RawPortfolio& raw);

/// Inverse of validation, used for re-validation and patching.
RawPortfolio to_raw(const Portfolio& p);

}  // namespace painworth
