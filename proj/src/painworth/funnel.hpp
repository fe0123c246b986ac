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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "painworth/money.hpp"

namespace painworth {

struct FunnelTargets {
  Money value_target;  // minimum acceptable annual economic value
  Money cost_budget;   // maximum acceptable annualized cost
  Money min_margin;    // minimum value - cost

  /// Throws Error(InvalidArgument) for negative amounts and
  /// Error(CurrencyMismatch) for mixed currencies.
  static FunnelTargets make(Money value_target, Money cost_budget, Money min_margin);
};

enum class ScenarioClass {
  Proceed,
  ImproveValue,  // value short, cost within budget
  ReduceCost,    // value sufficient, cost over budget or margin too thin
  Abandon,       // value short and cost over budget
};

enum class GateAction { AdvanceStage, RedesignForValue, RedesignForCost, Drop };

std::string_view to_string(ScenarioClass c);
std::string_view to_string(GateAction a);
std::optional<ScenarioClass> parse_scenario_class(std::string_view text);

struct FunnelVerdict {
  ScenarioClass scenario = ScenarioClass::Proceed;
  GateAction action = GateAction::AdvanceStage;
  std::string rationale;
};

/// Threshold comparisons are inclusive: value >= target passes, cost <=
/// budget passes. Throws Error(CurrencyMismatch).
ScenarioClass classify(Money v_economic, Money annualized_cost, const FunnelTargets& t);

GateAction action_for(ScenarioClass c);

FunnelVerdict verdict(ScenarioClass c, Money v_economic, Money annualized_cost,
                      const FunnelTargets& t);

struct Idea {
  std::string id;
  Money v_economic;
  Money annualized_cost;

  Money net() const { return v_economic - annualized_cost; }
  bool operator==(const Idea&) const = default;
};

/// Descending net value, then ascending cost, then id. Throws
/// Error(InvalidArgument) when empty, Error(CurrencyMismatch) when mixed.
std::vector<Idea> rank_ideas(std::vector<Idea> ideas);

}  // namespace painworth
