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

#include "painworth/valuation.hpp"

#include <algorithm>
#include <numeric>

namespace painworth {

namespace {

constexpr __int128 kNano = Decimal::kOne;

std::vector<AgentTotals> zero_totals(const std::vector<Agent>& agents, Currency currency) {
  std::vector<AgentTotals> out;
  out.reserve(agents.size());
  for (const auto& a : agents) out.push_back({a.id, Money::zero(currency), Money::zero(currency)});
  return out;
}

AgentTotals& totals_for(std::vector<AgentTotals>& totals, const std::string& agent_id) {
  auto it = std::find_if(totals.begin(), totals.end(),
                         [&](const AgentTotals& t) { return t.agent_id == agent_id; });
  return *it;
}

}  // namespace

const AgentTotals* ValuationReport::agent_totals(std::string_view agent_id) const {
  for (const auto& t : per_agent) {
    if (t.agent_id == agent_id) return &t;
  }
  return nullptr;
}

const KindTotals& ValuationReport::kind_totals(PainKind kind) const {
  return per_kind[kind == PainKind::Operational ? 0 : 1];
}

Money potential_line_value(const ImpactLine& line) {
  __int128 num = checked_mul(line.frequency.per_year().nanos(), line.impact.cents());
  return Money(round_half_even(num, kNano), line.impact.currency());
}

Money effective_line_value(const ImpactLine& line) {
  __int128 num = checked_mul(checked_mul(line.alleviation.omega().nanos(),
                                         line.frequency.per_year().nanos()),
                             line.impact.cents());
  return Money(round_half_even(num, kNano * kNano), line.impact.currency());
}

ValuationReport evaluate_portfolio(const Portfolio& p) {
  ValuationReport r;
  r.portfolio_id = p.id;
  r.currency = p.currency;
  r.agents = p.agents;
  r.per_agent = zero_totals(p.agents, p.currency);
  r.per_kind[0] = {PainKind::Operational, zero_totals(p.agents, p.currency),
                   Money::zero(p.currency), Money::zero(p.currency)};
  r.per_kind[1] = {PainKind::Structural, zero_totals(p.agents, p.currency),
                   Money::zero(p.currency), Money::zero(p.currency)};
  r.total_potential = Money::zero(p.currency);
  r.total_effective = Money::zero(p.currency);

  std::vector<const Pain*> pains;
  for (const auto& pain : p.pains) pains.push_back(&pain);
  std::sort(pains.begin(), pains.end(), [](const Pain* a, const Pain* b) { return a->id < b->id; });

  for (const Pain* pain : pains) {
    PainSummary summary{pain->id, pain->kind, pain->description, Money::zero(p.currency),
                        Money::zero(p.currency)};
    std::vector<const ImpactLine*> lines;
    for (const auto& line : pain->lines) lines.push_back(&line);
    std::sort(lines.begin(), lines.end(),
              [](const ImpactLine* a, const ImpactLine* b) { return a->agent < b->agent; });

    KindTotals& kind = r.per_kind[pain->kind == PainKind::Operational ? 0 : 1];
    for (const ImpactLine* line : lines) {
      LineValuation lv{pain->id,          pain->kind, line->agent,
                       line->frequency,   line->impact, line->alleviation,
                       line->note,        potential_line_value(*line),
                       effective_line_value(*line)};
      summary.potential += lv.potential;
      summary.effective += lv.effective;

      AgentTotals& agent = totals_for(r.per_agent, line->agent);
      agent.potential += lv.potential;
      agent.effective += lv.effective;
      AgentTotals& kind_agent = totals_for(kind.per_agent, line->agent);
      kind_agent.potential += lv.potential;
      kind_agent.effective += lv.effective;
      kind.potential += lv.potential;
      kind.effective += lv.effective;
      r.total_potential += lv.potential;
      r.total_effective += lv.effective;
      r.lines.push_back(std::move(lv));
    }
    r.pains.push_back(std::move(summary));
  }
  return r;
}

std::string_view to_string(CeilingBasis basis) {
  return basis == CeilingBasis::AllBeneficiaries ? "all" : "customer-only";
}

std::optional<CeilingBasis> parse_ceiling_basis(std::string_view text) {
  if (text == "all") return CeilingBasis::AllBeneficiaries;
  if (text == "customer-only") return CeilingBasis::CustomerOnly;
  return std::nullopt;
}

bool in_ceiling_basis(const Agent& agent, CeilingBasis basis) {
  if (!agent.beneficiary) return false;
  return basis == CeilingBasis::AllBeneficiaries || agent.side == AgentSide::Customer;
}

Money price_ceiling(const ValuationReport& r, CeilingBasis basis) {
  Money ceiling = Money::zero(r.currency);
  bool any = false;
  for (const auto& agent : r.agents) {
    if (!in_ceiling_basis(agent, basis)) continue;
    any = true;
    if (const auto* t = r.agent_totals(agent.id)) ceiling += t->effective;
  }
  if (!any) {
    throw Error(Errc::NoBeneficiary,
                "no beneficiary agent for ceiling basis '" + std::string(to_string(basis)) + "'");
  }
  return ceiling;
}

FeeQuote quote_fee(Money ceiling, const PricingPolicy& policy) {
  if (ceiling.cents() < 0) throw Error(Errc::DomainViolation, "price ceiling is negative");
  const Decimal share = policy.revenue_share();
  Money fee(round_half_even(checked_mul(share.nanos(), ceiling.cents()), kNano), ceiling.currency());
  return {ceiling, share, fee, ceiling - fee};
}

Money annualized_cost(const CostModel& c) {
  Money development(round_half_even(c.development.cents(), c.amortization_years),
                    c.development.currency());
  return development + c.annual_operation;
}

std::vector<AgentNet> allocate_fee(const ValuationReport& r, Money fee, CeilingBasis basis) {
  const Currency cur = r.currency;
  std::vector<AgentNet> out;
  std::vector<std::size_t> basis_idx;
  std::vector<__int128> weights;
  __int128 total_weight = 0;
  for (const auto& agent : r.agents) {
    const auto* t = r.agent_totals(agent.id);
    out.push_back({agent.id, Money::zero(cur), t ? t->effective : Money::zero(cur)});
    if (in_ceiling_basis(agent, basis)) {
      basis_idx.push_back(out.size() - 1);
      __int128 w = t ? std::max<std::int64_t>(t->effective.cents(), 0) : 0;
      weights.push_back(w);
      total_weight += w;
    }
  }
  if (basis_idx.empty() || fee.cents() == 0) return out;

  std::vector<std::int64_t> share(basis_idx.size(), 0);
  if (total_weight == 0) {
    share[0] = fee.cents();
  } else {
    std::vector<__int128> remainder(basis_idx.size());
    __int128 assigned = 0;
    for (std::size_t i = 0; i < basis_idx.size(); ++i) {
      __int128 num = checked_mul(fee.cents(), weights[i]);
      share[i] = static_cast<std::int64_t>(num / total_weight);
      remainder[i] = num % total_weight;
      assigned += share[i];
    }
    std::vector<std::size_t> order(basis_idx.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
    auto leftover = static_cast<std::int64_t>(fee.cents() - assigned);
    for (std::size_t k = 0; leftover > 0; k = (k + 1) % order.size(), --leftover) {
      share[order[k]] += 1;
    }
  }
  for (std::size_t i = 0; i < basis_idx.size(); ++i) {
    AgentNet& net = out[basis_idx[i]];
    net.fee_allocation = Money(share[i], cur);
    net.net -= net.fee_allocation;
  }
  return out;
}

EconomicSummary economic_summary(const ValuationReport& r, const FeeQuote& q, const CostModel& c,
                                 CeilingBasis basis) {
  for (const Money* m : {&q.ceiling, &q.fee, &c.development, &c.annual_operation}) {
    if (m->currency() != r.currency) {
      throw Error(Errc::CurrencyMismatch, "summary inputs use " + m->currency().to_string() +
                                              ", report uses " + r.currency.to_string());
    }
  }
  EconomicSummary s;
  s.v_economic_pot = r.total_potential;
  s.v_economic = r.total_effective;
  s.fee = q.fee;
  s.annualized_cost = annualized_cost(c);
  s.net_total = s.v_economic - s.annualized_cost;
  s.net_by_agent = allocate_fee(r, q.fee, basis);
  return s;
}

Evaluation evaluate(const Portfolio& p, const EvaluationOptions& options) {
  Evaluation e;
  e.report = evaluate_portfolio(p);
  e.basis = options.basis;
  PricingPolicy pricing = p.pricing;
  if (options.revenue_share) {
    auto policy = PricingPolicy::make(*options.revenue_share);
    if (!policy) {
      throw Error(Errc::ShareOutOfRange,
                  "revenue share " + options.revenue_share->to_string() + " outside [0, 1]");
    }
    pricing = *policy;
  }
  CostModel cost{Money::zero(p.currency), Money::zero(p.currency), 1};
  if (options.cost_model) {
    cost = *options.cost_model;
  } else if (p.cost_model) {
    cost = *p.cost_model;
  }
  if (cost.amortization_years < 1 || cost.development.cents() < 0 || cost.annual_operation.cents() < 0) {
    throw Error(Errc::InvalidCostModel, "cost amounts must be >= 0 and amortization_years >= 1");
  }
  e.quote = quote_fee(price_ceiling(e.report, options.basis), pricing);
  e.summary = economic_summary(e.report, e.quote, cost, options.basis);
  return e;
}

}  // namespace painworth
