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
#include <vector>

#include "painworth/funnel.hpp"
#include "painworth/sensitivity.hpp"

// Machine-readable renderings of gate verdicts and sensitivity results. The
// CLI and the HTTP service both print these, so numbers agree byte for byte.

namespace painworth {

struct GateOutcome {
  FunnelVerdict verdict;
  FunnelTargets targets;
  Money v_economic;
  Money annualized_cost;
};

/// Values `p` and classifies it; the cost comes from `cost_override`, else
/// the portfolio cost model, else zero.
GateOutcome gate_portfolio(const Portfolio& p, const FunnelTargets& t,
                           const std::optional<CostModel>& cost_override = std::nullopt);

nlohmann::ordered_json gate_to_json(const GateOutcome& g);
std::string gate_to_text(const GateOutcome& g);

nlohmann::ordered_json sweep_to_json(const SweepCurve& c);
std::string sweep_to_csv(const SweepCurve& c);

/// Shortest decimal text that reads back as the same double.
std::string format_ratio(double value);

nlohmann::ordered_json breakeven_to_json(const Breakeven& b, Money annualized_cost);
std::string breakeven_to_csv(const Breakeven& b, Money annualized_cost);

nlohmann::ordered_json tornado_to_json(const std::vector<TornadoEntry>& entries, Decimal rel);
std::string tornado_to_csv(const std::vector<TornadoEntry>& entries);

}  // namespace painworth
