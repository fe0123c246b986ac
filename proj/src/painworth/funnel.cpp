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

#include "painworth/funnel.hpp"

#include <algorithm>

#include "painworth/error.hpp"

namespace painworth {

FunnelTargets FunnelTargets::make(Money value_target, Money cost_budget, Money min_margin) {
  if (value_target.currency() != cost_budget.currency() ||
      value_target.currency() != min_margin.currency()) {
    throw Error(Errc::CurrencyMismatch, "funnel targets use mixed currencies");
  }
  if (value_target.cents() < 0 || cost_budget.cents() < 0 || min_margin.cents() < 0) {
    throw Error(Errc::InvalidArgument, "funnel targets must be nonnegative");
  }
  return {value_target, cost_budget, min_margin};
}

std::string_view to_string(ScenarioClass c) {
  switch (c) {
    case ScenarioClass::Proceed: return "Proceed";
    case ScenarioClass::ImproveValue: return "ImproveValue";
    case ScenarioClass::ReduceCost: return "ReduceCost";
    case ScenarioClass::Abandon: return "Abandon";
  }
  return "";
}

std::string_view to_string(GateAction a) {
  switch (a) {
    case GateAction::AdvanceStage: return "AdvanceStage";
    case GateAction::RedesignForValue: return "RedesignForValue";
    case GateAction::RedesignForCost: return "RedesignForCost";
    case GateAction::Drop: return "Drop";
  }
  return "";
}

std::optional<ScenarioClass> parse_scenario_class(std::string_view text) {
  for (auto c : {ScenarioClass::Proceed, ScenarioClass::ImproveValue, ScenarioClass::ReduceCost,
                 ScenarioClass::Abandon}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

ScenarioClass classify(Money v_economic, Money annualized_cost, const FunnelTargets& t) {
  const bool value_ok = v_economic >= t.value_target;
  const bool cost_ok = annualized_cost <= t.cost_budget;
  if (!value_ok) return cost_ok ? ScenarioClass::ImproveValue : ScenarioClass::Abandon;
  if (!cost_ok) return ScenarioClass::ReduceCost;
  if (v_economic - annualized_cost < t.min_margin) return ScenarioClass::ReduceCost;
  return ScenarioClass::Proceed;
}

GateAction action_for(ScenarioClass c) {
  switch (c) {
    case ScenarioClass::Proceed: return GateAction::AdvanceStage;
    case ScenarioClass::ImproveValue: return GateAction::RedesignForValue;
    case ScenarioClass::ReduceCost: return GateAction::RedesignForCost;
    case ScenarioClass::Abandon: return GateAction::Drop;
  }
  return GateAction::Drop;
}

FunnelVerdict verdict(ScenarioClass c, Money v_economic, Money annualized_cost,
                      const FunnelTargets& t) {
  const std::string cur = " " + v_economic.currency().to_string();
  const std::string v = v_economic.to_grouped() + cur;
  const std::string cost = annualized_cost.to_grouped() + cur;
  const std::string target = t.value_target.to_grouped() + cur;
  const std::string budget = t.cost_budget.to_grouped() + cur;

  std::string why;
  switch (c) {
    case ScenarioClass::Proceed:
      why = "value " + v + " meets target " + target + ", cost " + cost + " within budget " +
            budget + ", margin " + (v_economic - annualized_cost).to_grouped() + cur +
            " >= " + t.min_margin.to_grouped() + cur;
      break;
    case ScenarioClass::ImproveValue:
      why = "value " + v + " below target " + target + " while cost " + cost +
            " is within budget " + budget + "; redesign for more value";
      break;
    case ScenarioClass::ReduceCost:
      if (annualized_cost > t.cost_budget) {
        why = "value " + v + " meets target " + target + " but cost " + cost + " exceeds budget " +
              budget + "; redesign for lower cost";
      } else {
        why = "value " + v + " and cost " + cost + " pass, but margin " +
              (v_economic - annualized_cost).to_grouped() + cur + " is below minimum " +
              t.min_margin.to_grouped() + cur + "; redesign for lower cost";
      }
      break;
    case ScenarioClass::Abandon:
      why = "value " + v + " below target " + target + " and cost " + cost + " exceeds budget " +
            budget + "; drop the idea";
      break;
  }
  return {c, action_for(c), why};
}

std::vector<Idea> rank_ideas(std::vector<Idea> ideas) {
  if (ideas.empty()) throw Error(Errc::InvalidArgument, "rank_ideas needs at least one idea");
  const Currency cur = ideas.front().v_economic.currency();
  for (const auto& idea : ideas) {
    if (idea.v_economic.currency() != cur || idea.annualized_cost.currency() != cur) {
      throw Error(Errc::CurrencyMismatch, "idea '" + idea.id + "' uses a different currency");
    }
  }
  std::sort(ideas.begin(), ideas.end(), [](const Idea& a, const Idea& b) {
    const Money na = a.net(), nb = b.net();
    if (na != nb) return na > nb;
    if (a.annualized_cost != b.annualized_cost) return a.annualized_cost < b.annualized_cost;
    return a.id < b.id;
  });
  return ideas;
}

}  // namespace painworth
