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

#include "painworth/domain.hpp"

#include <set>

namespace painworth {

std::string_view to_string(PainKind kind) {
  return kind == PainKind::Operational ? "operational" : "structural";
}

std::optional<PainKind> parse_pain_kind(std::string_view text) {
  if (text == "operational") return PainKind::Operational;
  if (text == "structural") return PainKind::Structural;
  return std::nullopt;
}

std::string_view to_string(AgentSide side) {
  return side == AgentSide::Customer ? "customer" : "provider";
}

std::optional<AgentSide> parse_agent_side(std::string_view text) {
  if (text == "customer") return AgentSide::Customer;
  if (text == "provider") return AgentSide::Provider;
  return std::nullopt;
}

const Agent* Portfolio::find_agent(std::string_view agent_id) const {
  for (const auto& a : agents) {
    if (a.id == agent_id) return &a;
  }
  return nullptr;
}

const Pain* Portfolio::find_pain(std::int64_t pain_id) const {
  for (const auto& p : pains) {
    if (p.id == pain_id) return &p;
  }
  return nullptr;
}

Portfolio filter_by_kind(const Portfolio& p, PainKind kind) {
  Portfolio out = p;
  std::erase_if(out.pains, [kind](const Pain& pain) { return pain.kind != kind; });
  return out;
}

const Portfolio& ValidationResult::value() const {
  if (!portfolio) throw Error(issues);
  return *portfolio;
}

namespace {

class Checker {
 public:
  explicit Checker(const RawPortfolio& raw) : raw_(raw) {}

  ValidationResult run() {
    Portfolio p;
    p.id = raw_.id;
    p.currency = raw_.currency;

    check_agents(p);
    check_pains(p);
    check_cost_model(p);

    if (auto pricing = PricingPolicy::make(raw_.revenue_share)) {
      p.pricing = *pricing;
    } else {
      add(Errc::ShareOutOfRange, raw_.pricing_locus,
          "revenue share " + raw_.revenue_share.to_string() + " outside [0, 1]");
    }

    ValidationResult result;
    if (issues_.empty()) {
      result.portfolio = std::move(p);
    } else {
      result.issues = std::move(issues_);
    }
    return result;
  }

 private:
  void add(Errc code, std::string locus, std::string message) {
    issues_.push_back({code, std::move(locus), std::move(message)});
  }

  void check_currency(const Money& m, const std::string& locus) {
    if (m.currency() != raw_.currency) {
      add(Errc::CurrencyMismatch, locus,
          m.currency().to_string() + " differs from portfolio currency " +
              raw_.currency.to_string());
    }
  }

  void check_agents(Portfolio& p) {
    std::set<std::string> seen;
    bool any_beneficiary = false;
    for (const auto& ra : raw_.agents) {
      if (ra.agent.id.empty()) {
        add(Errc::MissingField, ra.locus + ".id", "agent id is empty");
        continue;
      }
      if (!seen.insert(ra.agent.id).second) {
        add(Errc::DuplicateAgentId, ra.locus + ".id", "agent '" + ra.agent.id + "' defined twice");
        continue;
      }
      any_beneficiary = any_beneficiary || ra.agent.beneficiary;
      p.agents.push_back(ra.agent);
    }
    if (!any_beneficiary) add(Errc::NoBeneficiary, "agents", "no beneficiary agent");
  }

  void check_pains(Portfolio& p) {
    std::set<std::int64_t> ids;
    for (const auto& rp : raw_.pains) {
      if (rp.id <= 0) {
        add(Errc::InvalidPainId, rp.locus + ".id", "pain id must be a positive integer");
      } else if (!ids.insert(rp.id).second) {
        add(Errc::DuplicatePainId, rp.locus + ".id",
            "pain id " + std::to_string(rp.id) + " used twice");
      }
      if (rp.lines.empty()) add(Errc::EmptyLines, rp.locus + ".lines", "pain has no impact lines");

      Pain pain{rp.id, rp.kind, rp.description, {}};
      std::set<std::string> agents_seen;
      for (const auto& rl : rp.lines) {
        if (!agents_seen.insert(rl.agent).second) {
          add(Errc::DuplicateAgentLine, rl.locus + ".agent",
              "second line for agent '" + rl.agent + "' in pain " + std::to_string(rp.id));
        }
        if (auto line = check_line(p, rl)) pain.lines.push_back(std::move(*line));
      }
      p.pains.push_back(std::move(pain));
    }
  }

  std::optional<ImpactLine> check_line(const Portfolio& p, const RawLine& rl) {
    const std::size_t before = issues_.size();
    ImpactLine line;
    line.agent = rl.agent;
    line.note = rl.note;
    line.impact = rl.impact;

    if (p.find_agent(rl.agent) == nullptr) {
      add(Errc::UnknownAgent, rl.locus + ".agent", "agent '" + rl.agent + "' is not defined");
    }
    if (auto rate = Rate::make(rl.frequency)) {
      line.frequency = *rate;
    } else {
      add(Errc::NegativeFrequency, rl.locus + ".frequency",
          "frequency " + rl.frequency.to_string() + " is negative");
    }
    check_currency(rl.impact, rl.locus + ".impact");
    if (rl.impact.cents() < 0) {
      add(Errc::NegativeImpact, rl.locus + ".impact", "impact " + rl.impact.to_string() + " is negative");
    }

    if (rl.confusion) {
      const auto& c = *rl.confusion;
      if (c.tp < 0 || c.fp < 0 || c.fn < 0 || c.tn < 0) {
        add(Errc::InvalidAnnotation, rl.locus + ".confusion", "confusion counts must be nonnegative");
      } else {
        line.confusion = c;
      }
    }
    if (rl.investment) {
      const auto& inv = *rl.investment;
      auto cap = Alleviation::make(inv.omega_max);
      bool ok = true;
      if (!cap || inv.omega_max.nanos() == 0) {
        add(Errc::InvalidAnnotation, rl.locus + ".investment.omega_max", "omega_max must be in (0, 1]");
        ok = false;
      }
      if (inv.kappa.cents() <= 0) {
        add(Errc::InvalidAnnotation, rl.locus + ".investment.kappa", "kappa must be positive");
        ok = false;
      }
      if (inv.spend.cents() < 0) {
        add(Errc::InvalidAnnotation, rl.locus + ".investment.spend", "spend must be nonnegative");
        ok = false;
      }
      check_currency(inv.kappa, rl.locus + ".investment.kappa");
      check_currency(inv.spend, rl.locus + ".investment.spend");
      if (ok) line.investment = InvestmentAnnotation{InvestmentCurve::make(*cap, inv.kappa), inv.spend};
    }

    if (rl.alleviation) {
      if (auto a = Alleviation::make(*rl.alleviation)) {
        line.alleviation = *a;
      } else {
        add(Errc::OmegaOutOfRange, rl.locus + ".alleviation",
            "alleviation " + rl.alleviation->to_string() + " outside [0, 1]");
      }
    } else if (line.confusion) {
      if (line.confusion->tp + line.confusion->fn == 0) {
        add(Errc::NoPositives, rl.locus + ".confusion", "tp + fn is zero; alleviation undefined");
      } else {
        line.alleviation = omega_from_confusion(*line.confusion);
      }
    } else if (line.investment && line.investment->spend.currency() == line.investment->curve.kappa().currency()) {
      line.alleviation = omega_from_investment(line.investment->curve, line.investment->spend);
    } else if (!rl.investment) {
      add(Errc::MissingField, rl.locus + ".alleviation",
          "alleviation missing and no confusion or investment annotation to derive it");
    }

    if (issues_.size() != before) return std::nullopt;
    return line;
  }

  void check_cost_model(Portfolio& p) {
    if (!raw_.cost_model) return;
    const auto& rc = *raw_.cost_model;
    const std::size_t before = issues_.size();
    check_currency(rc.development, rc.locus + ".development");
    check_currency(rc.annual_operation, rc.locus + ".annual_operation");
    if (rc.development.cents() < 0) {
      add(Errc::InvalidCostModel, rc.locus + ".development", "development cost is negative");
    }
    if (rc.annual_operation.cents() < 0) {
      add(Errc::InvalidCostModel, rc.locus + ".annual_operation", "operating cost is negative");
    }
    if (rc.amortization_years < 1) {
      add(Errc::InvalidCostModel, rc.locus + ".amortization_years", "amortization_years must be >= 1");
    }
    if (issues_.size() == before) {
      p.cost_model = CostModel{rc.development, rc.annual_operation, rc.amortization_years};
    }
  }

  const RawPortfolio& raw_;
  std::vector<Issue> issues_;
};

}  // namespace

ValidationResult validate_portfolio(const RawPortfolio& raw) { return Checker(raw).run(); }

RawPortfolio to_raw(const Portfolio& p) {
  RawPortfolio raw;
  raw.id = p.id;
  raw.currency = p.currency;
  for (std::size_t i = 0; i < p.agents.size(); ++i) {
    raw.agents.push_back({"agents[" + std::to_string(i) + "]", p.agents[i]});
  }
  for (std::size_t i = 0; i < p.pains.size(); ++i) {
    const auto& pain = p.pains[i];
    RawPain rp;
    rp.locus = "pains[" + std::to_string(i) + "]";
    rp.id = pain.id;
    rp.kind = pain.kind;
    rp.description = pain.description;
    for (std::size_t j = 0; j < pain.lines.size(); ++j) {
      const auto& line = pain.lines[j];
      RawLine rl;
      rl.locus = rp.locus + ".lines[" + std::to_string(j) + "]";
      rl.agent = line.agent;
      rl.frequency = line.frequency.per_year();
      rl.impact = line.impact;
      rl.alleviation = line.alleviation.omega();
      rl.note = line.note;
      rl.confusion = line.confusion;
      if (line.investment) {
        rl.investment = RawInvestment{line.investment->curve.omega_max().omega(),
                                      line.investment->curve.kappa(), line.investment->spend};
      }
      rp.lines.push_back(std::move(rl));
    }
    raw.pains.push_back(std::move(rp));
  }
  if (p.cost_model) {
    raw.cost_model = RawCostModel{"cost_model", p.cost_model->development,
                                  p.cost_model->annual_operation, p.cost_model->amortization_years};
  }
  raw.revenue_share = p.pricing.revenue_share();
  return raw;
}

CostModel CostModel::make(Money development, Money annual_operation,
                          std::int64_t amortization_years) {
  if (development.currency() != annual_operation.currency()) {
    throw Error(Errc::CurrencyMismatch, "cost model mixes currencies");
  }
  if (development.cents() < 0 || annual_operation.cents() < 0) {
    throw Error(Errc::InvalidCostModel, "cost model amounts must be >= 0");
  }
  if (amortization_years < 1) {
    throw Error(Errc::InvalidCostModel, "amortization_years must be >= 1");
  }
  return CostModel{development, annual_operation, amortization_years};
}

}  // namespace painworth
