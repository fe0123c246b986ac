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


#include "painworth/analysis_report.hpp"

#include <charconv>

#include "painworth/valuation.hpp"

namespace painworth {

using nlohmann::ordered_json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

GateOutcome gate_portfolio(const Portfolio& p, const FunnelTargets& t,
                           const std::optional<CostModel>& cost_override) {
  const ValuationReport r = evaluate_portfolio(p);
  const Money v = r.total_effective;
  Money cost = Money::zero(p.currency);
  if (cost_override) {
    cost = annualized_cost(*cost_override);
  } else if (p.cost_model) {
    cost = annualized_cost(*p.cost_model);
  }
  const ScenarioClass c = classify(v, cost, t);
  return GateOutcome{verdict(c, v, cost, t), t, v, cost};
}

ordered_json gate_to_json(const GateOutcome& g) {
  ordered_json doc;
  doc["class"] = std::string(to_string(g.verdict.scenario));
  doc["action"] = std::string(to_string(g.verdict.action));
  doc["rationale"] = g.verdict.rationale;
  doc["v_economic"] = g.v_economic.to_string();
  doc["annualized_cost"] = g.annualized_cost.to_string();
  doc["net"] = (g.v_economic - g.annualized_cost).to_string();
  doc["targets"] = {{"value_target", g.targets.value_target.to_string()},
                    {"cost_budget", g.targets.cost_budget.to_string()},
                    {"min_margin", g.targets.min_margin.to_string()}};
  return doc;
}

std::string gate_to_text(const GateOutcome& g) {
  const std::string cur = " " + g.v_economic.currency().to_string();
  std::string out;
  out += "class: " + std::string(to_string(g.verdict.scenario)) + "\n";
  out += "action: " + std::string(to_string(g.verdict.action)) + "\n";
  out += "v_economic: " + g.v_economic.to_grouped() + cur + "\n";
  out += "annualized_cost: " + g.annualized_cost.to_grouped() + cur + "\n";
  out += "rationale: " + g.verdict.rationale + "\n";
  return out;
}

ordered_json sweep_to_json(const SweepCurve& c) {
  ordered_json doc;
  doc["path"] = c.path.to_string();
  doc["points"] = ordered_json::array();
  for (const auto& pt : c.points) {
    doc["points"].push_back({{"value", pt.value.to_string()}, {"v_economic", pt.v_economic.to_string()}});
  }
  return doc;
}

std::string sweep_to_csv(const SweepCurve& c) {
  std::string out = csv_field(c.path.to_string()) + ",v_economic\n";
  for (const auto& pt : c.points) out += pt.value.to_string() + "," + pt.v_economic.to_string() + "\n";
  return out;
}

std::string format_ratio(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

ordered_json breakeven_to_json(const Breakeven& b, Money annualized_cost) {
  ordered_json doc;
  doc["annualized_cost"] = annualized_cost.to_string();
  doc["reachable"] = b.reachable;
  if (b.reachable) {
    doc["lambda"] = format_ratio(b.lambda);
  } else {
    doc["lambda"] = nullptr;
  }
  doc["lambda_max"] = format_ratio(b.lambda_max);
  doc["value_cap"] = b.value_cap.to_string();
  return doc;
}

std::string breakeven_to_csv(const Breakeven& b, Money annualized_cost) {
  std::string out = "annualized_cost,lambda,lambda_max,value_cap\n";
  out += annualized_cost.to_string() + "," + (b.reachable ? format_ratio(b.lambda) : "unreachable") + "," +
         format_ratio(b.lambda_max) + "," + b.value_cap.to_string() + "\n";
  return out;
}

ordered_json tornado_to_json(const std::vector<TornadoEntry>& entries, Decimal rel) {
  ordered_json doc;
  doc["rel"] = rel.to_string();
  doc["entries"] = ordered_json::array();
  for (const auto& e : entries) {
    doc["entries"].push_back({{"path", e.path.to_string()},
                              {"base", e.base.to_string()},
                              {"low", e.low.to_string()},
                              {"high", e.high.to_string()},
                              {"delta_low", e.delta_low.to_string()},
                              {"delta_high", e.delta_high.to_string()}});
  }
  return doc;
}

std::string tornado_to_csv(const std::vector<TornadoEntry>& entries) {
  std::string out = "path,base,low,high,delta_low,delta_high\n";
  for (const auto& e : entries) {
    out += csv_field(e.path.to_string()) + "," + e.base.to_string() + "," + e.low.to_string() + "," +
           e.high.to_string() + "," + e.delta_low.to_string() + "," + e.delta_high.to_string() + "\n";
  }
  return out;
}

}  // namespace painworth
