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

#include "painworth/demo.hpp"

#include "painworth/portfolio_io.hpp"

namespace painworth {

namespace {

RawLine line(const char* agent, const char* frequency, const char* impact, const char* omega,
             const char* note) {
  const Currency eur = *Currency::parse("EUR");
  RawLine l;
  l.agent = agent;
  l.frequency = *Decimal::parse(frequency);
  l.impact = *Money::parse(impact, eur);
  l.alleviation = *Decimal::parse(omega);
  l.note = note;
  return l;
}

RawPain pain(std::int64_t id, PainKind kind, const char* description, std::vector<RawLine> lines) {
  RawPain p;
  p.locus = "demo pain " + std::to_string(id);
  p.id = id;
  p.kind = kind;
  p.description = description;
  p.lines = std::move(lines);
  for (auto& l : p.lines) l.locus = p.locus + "." + l.agent;
  return p;
}

}  // namespace

Portfolio demo_portfolio() {
  RawPortfolio raw;
  raw.id = "demo";
  raw.currency = *Currency::parse("EUR");
  raw.agents = {
      {"demo agent customer", {"customer", "Agent of Customer", true, AgentSide::Customer}},
      {"demo agent provider", {"provider", "Agent of Provider", true, AgentSide::Provider}},
  };
  raw.pains = {
      pain(1, PainKind::Operational,
           "Missing information about current job => technical service desk inquiries",
           {line("customer", "25", "50.00", "0.8", "appr. once per 2 weeks; 1 hour search time"),
            line("provider", "25", "25.00", "0.8", "30 minutes technical service agent time")}),
      pain(2, PainKind::Operational,
           "Low machine performance due to wear parts not being replaced timely",
           {line("customer", "50", "100.00", "0.6", "almost weekly; 1 hour of performance")}),
      pain(3, PainKind::Operational, "Machine break downs",
           {line("customer", "6", "600.00", "0.7",
                 "once per 2 months; 4 hours machine costs + idle operator"),
            line("provider", "6", "1000.00", "0.7", "technician, logistics, travelling")}),
      pain(4, PainKind::Structural,
           "Recurring revenue can not be billed because of missing IT tool",
           {line("customer", "12", "150.00", "0.7",
                 "assuming a monthly payment; 3 hours additional effort for workarounds"),
            line("provider", "12", "100.00", "0.5", "2 hours additional effort for workarounds")}),
  };
  raw.revenue_share = *Decimal::parse("0.5");
  return validate_portfolio(raw).value();
}

std::string demo_fixture_json() { return serialize_portfolio(demo_portfolio(), PortfolioFormat::Json); }

}  // namespace painworth
