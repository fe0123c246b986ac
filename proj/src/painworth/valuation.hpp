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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "painworth/domain.hpp"

// Annual value of solving pains.
//
//   potential   = f * v          per line, the value of removing the pain
//   effective   = omega * f * v  per line, what the service actually realises
//
// Each line value is rounded half-even to the cent exactly once, after the
// full product. Every aggregate is an exact sum of rounded line values, so
// subtotals always add up to the printed totals.

namespace painworth {

struct LineValuation {
  std::int64_t pain_id = 0;
  PainKind kind = PainKind::Operational;
  std::string agent_id;
  Rate frequency;
  Money impact;
  Alleviation alleviation;
  std::string note;
  Money potential;
  Money effective;

  bool operator==(const LineValuation&) const = default;
};

struct AgentTotals {
  std::string agent_id;
  Money potential;
  Money effective;

  bool operator==(const AgentTotals&) const = default;
};

struct KindTotals {
  PainKind kind = PainKind::Operational;
  std::vector<AgentTotals> per_agent;  // portfolio agent order
  Money potential;
  Money effective;

  bool operator==(const KindTotals&) const = default;
};

struct PainSummary {
  std::int64_t id = 0;
  PainKind kind = PainKind::Operational;
  std::string description;
  Money potential;
  Money effective;

  bool operator==(const PainSummary&) const = default;
};

struct ValuationReport {
  std::string portfolio_id;
  Currency currency;
  std::vector<Agent> agents;
  std::vector<PainSummary> pains;        // ascending pain id
  std::vector<LineValuation> lines;      // pain id, then agent id
  std::vector<AgentTotals> per_agent;    // portfolio agent order
  std::array<KindTotals, 2> per_kind;    // operational, structural
  Money total_potential;
  Money total_effective;

  const AgentTotals* agent_totals(std::string_view agent_id) const;
  const KindTotals& kind_totals(PainKind kind) const;
  bool operator==(const ValuationReport&) const = default;
};

Money potential_line_value(const ImpactLine& line);
Money effective_line_value(const ImpactLine& line);

ValuationReport evaluate_portfolio(const Portfolio& p);

enum class CeilingBasis {
  AllBeneficiaries,  // every beneficiary agent, customer and provider side
  CustomerOnly,      // beneficiary agents on the customer side only
};

std::string_view to_string(CeilingBasis basis);
std::optional<CeilingBasis> parse_ceiling_basis(std::string_view text);

/// Whether `agent` counts toward the price ceiling under `basis`.
bool in_ceiling_basis(const Agent& agent, CeilingBasis basis);

/// Effective value summed over the agents in `basis`: the most a rational
/// set of beneficiaries would pay per year. Throws Error(NoBeneficiary) if
/// no agent qualifies.
Money price_ceiling(const ValuationReport& r, CeilingBasis basis = CeilingBasis::AllBeneficiaries);

struct FeeQuote {
  Money ceiling;
  Decimal share;
  Money fee;
  Money retained_by_beneficiaries;
};

/// fee = share * ceiling, half-even to the cent. Throws
/// Error(DomainViolation) for a negative ceiling.
FeeQuote quote_fee(Money ceiling, const PricingPolicy& policy);

/// development / amortization_years (half-even) + annual_operation.
Money annualized_cost(const CostModel& c);

struct AgentNet {
  std::string agent_id;
  Money fee_allocation;
  Money net;  // agent effective value minus its fee allocation
};

struct EconomicSummary {
  Money v_economic_pot;
  Money v_economic;
  Money fee;
  Money annualized_cost;
  Money net_total;  // v_economic - annualized_cost
  std::vector<AgentNet> net_by_agent;
};

/// Splits `fee` over the agents in `basis` pro rata to their effective
/// value; leftover cents go to the largest remainders, ties to agent order.
std::vector<AgentNet> allocate_fee(const ValuationReport& r, Money fee, CeilingBasis basis);

/// Throws Error(CurrencyMismatch) when inputs disagree on currency.
EconomicSummary economic_summary(const ValuationReport& r, const FeeQuote& q, const CostModel& c,
                                 CeilingBasis basis = CeilingBasis::AllBeneficiaries);

/// Options shared by the CLI and the HTTP service for a full evaluation.
struct EvaluationOptions {
  std::optional<Decimal> revenue_share;  // overrides the portfolio pricing
  std::optional<CostModel> cost_model;   // overrides the portfolio cost model
  CeilingBasis basis = CeilingBasis::AllBeneficiaries;
};

struct Evaluation {
  ValuationReport report;
  CeilingBasis basis = CeilingBasis::AllBeneficiaries;
  FeeQuote quote;
  EconomicSummary summary;
};

/// Report, fee quote and economic summary in one pass. A missing cost model
/// counts as zero cost. Throws Error(ShareOutOfRange) for a bad share override.
Evaluation evaluate(const Portfolio& p, const EvaluationOptions& options = {});

}  // namespace painworth
