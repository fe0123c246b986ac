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


#include <gtest/gtest.h>

#include <algorithm>
#include <json.hpp>

#include "painworth/demo.hpp"
#include "painworth/portfolio_io.hpp"
#include "support/test_support.hpp"

namespace painworth {
namespace {

using nlohmann::json;

json demo_doc() { return json::parse(demo_fixture_json()); }

ValidationResult check(const json& doc) { return portfolio_from_json(doc); }

bool has_issue(const ValidationResult& r, Errc code) {
  return std::any_of(r.issues.begin(), r.issues.end(), [&](const Issue& i) { return i.code == code; });
}

TEST(Validate, DemoIsValid) {
  const Portfolio p = demo_portfolio();
  EXPECT_EQ(p.pains.size(), 4u);
  std::size_t lines = 0;
  for (const auto& pain : p.pains) lines += pain.lines.size();
  EXPECT_EQ(lines, 7u);
  EXPECT_TRUE(check(demo_doc()).ok());
}

TEST(Validate, OmegaAboveOne) {
  json doc = demo_doc();
  doc["pains"][0]["lines"][0]["alleviation"] = "1.2";
  const auto r = check(doc);
  ASSERT_FALSE(r.ok());
  ASSERT_EQ(r.issues.size(), 1u);
  EXPECT_EQ(r.issues[0].code, Errc::OmegaOutOfRange);
  EXPECT_NE(r.issues[0].locus.find("alleviation"), std::string::npos);
}

TEST(Validate, NegativeFrequency) {
  json doc = demo_doc();
  doc["pains"][1]["lines"][0]["frequency"] = -5;
  const auto r = check(doc);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_issue(r, Errc::NegativeFrequency));
}

TEST(Validate, ZeroFrequencyIsAllowed) {
  json doc = demo_doc();
  doc["pains"][1]["lines"][0]["frequency"] = "0";
  EXPECT_TRUE(check(doc).ok());
}

TEST(Validate, CollectsEveryIssue) {
  json doc = demo_doc();
  doc["pains"][0]["lines"][0]["alleviation"] = "1.2";
  doc["pains"][1]["lines"][0]["frequency"] = "-5";
  doc["pains"][2]["lines"][1]["impact"] = "-1.00";
  doc["pains"][3]["lines"][0]["agent"] = "nobody";
  doc["pains"][3]["id"] = 1;
  const auto r = check(doc);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_issue(r, Errc::OmegaOutOfRange));
  EXPECT_TRUE(has_issue(r, Errc::NegativeFrequency));
  EXPECT_TRUE(has_issue(r, Errc::NegativeImpact));
  EXPECT_TRUE(has_issue(r, Errc::UnknownAgent));
  EXPECT_TRUE(has_issue(r, Errc::DuplicatePainId));
  try {
    (void)r.value();
    FAIL() << "value() must throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ValidationFailed);
    EXPECT_EQ(e.issues().size(), r.issues.size());
  }
}

TEST(Validate, StructuralProblems) {
  json doc = demo_doc();
  doc["pains"][0]["lines"] = json::array();
  doc["pains"][1]["id"] = 0;
  doc["pains"][2]["lines"][1]["agent"] = "customer";
  const auto r = check(doc);
  EXPECT_TRUE(has_issue(r, Errc::EmptyLines));
  EXPECT_TRUE(has_issue(r, Errc::InvalidPainId));
  EXPECT_TRUE(has_issue(r, Errc::DuplicateAgentLine));
}

TEST(Validate, AgentsAndPricing) {
  json doc = demo_doc();
  doc["agents"][0]["beneficiary"] = false;
  doc["agents"][1]["beneficiary"] = false;
  doc["pricing"]["revenue_share"] = "1.5";
  const auto r = check(doc);
  EXPECT_TRUE(has_issue(r, Errc::NoBeneficiary));
  EXPECT_TRUE(has_issue(r, Errc::ShareOutOfRange));

  json dup = demo_doc();
  dup["agents"][1]["id"] = "customer";
  EXPECT_TRUE(has_issue(check(dup), Errc::DuplicateAgentId));
}

TEST(Validate, LineCurrencyMustMatch) {
  json doc = demo_doc();
  doc["pains"][0]["lines"][0]["currency"] = "USD";
  const auto r = check(doc);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_issue(r, Errc::CurrencyMismatch));
}

TEST(Validate, CostModel) {
  json doc = demo_doc();
  doc["cost_model"] = {{"development", "-1.00"}, {"annual_operation", "10.00"}, {"amortization_years", 0}};
  const auto r = check(doc);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(std::count_if(r.issues.begin(), r.issues.end(),
                          [](const Issue& i) { return i.code == Errc::InvalidCostModel; }),
            2);
  EXPECT_THROW(CostModel::make(testing::eur_amount("1"), testing::eur_amount("1"), 0), Error);
}

TEST(Validate, AlleviationDerivedFromConfusion) {
  json doc = demo_doc();
  auto& line = doc["pains"][0]["lines"][0];
  line.erase("alleviation");
  line["confusion"] = {{"tp", 8}, {"fp", 3}, {"fn", 2}, {"tn", 100}};
  const auto r = check(doc);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.portfolio->pains[0].lines[0].alleviation.omega(), testing::dec("0.8"));
  ASSERT_TRUE(r.portfolio->pains[0].lines[0].confusion.has_value());
}

TEST(Validate, AlleviationDerivedFromInvestment) {
  json doc = demo_doc();
  auto& line = doc["pains"][0]["lines"][0];
  line.erase("alleviation");
  line["investment"] = {{"omega_max", "0.8"}, {"kappa", "1000.00"}, {"spend", "0.00"}};
  const auto r = check(doc);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.portfolio->pains[0].lines[0].alleviation.omega().nanos(), 0);
}

TEST(Validate, AlleviationRequiredWithoutAnnotation) {
  json doc = demo_doc();
  doc["pains"][0]["lines"][0].erase("alleviation");
  const auto r = check(doc);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_issue(r, Errc::MissingField));
}

TEST(Validate, ConfusionWithoutPositives) {
  json doc = demo_doc();
  auto& line = doc["pains"][0]["lines"][0];
  line.erase("alleviation");
  line["confusion"] = {{"tp", 0}, {"fp", 3}, {"fn", 0}, {"tn", 100}};
  EXPECT_TRUE(has_issue(check(doc), Errc::NoPositives));
}

TEST(Validate, EmptyPainsListIsValid) {
  json doc = demo_doc();
  doc["pains"] = json::array();
  const auto r = check(doc);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.portfolio->pains.empty());
}

TEST(Validate, RawRoundTrip) {
  const Portfolio p = demo_portfolio();
  EXPECT_EQ(validate_portfolio(to_raw(p)).value(), p);
}

TEST(FilterByKind, KeepsOnlyRequestedKind) {
  const Portfolio p = demo_portfolio();
  const Portfolio op = filter_by_kind(p, PainKind::Operational);
  const Portfolio st = filter_by_kind(p, PainKind::Structural);
  EXPECT_EQ(op.pains.size(), 3u);
  ASSERT_EQ(st.pains.size(), 1u);
  EXPECT_EQ(st.pains[0].id, 4);
  EXPECT_EQ(op.agents, p.agents);
}

}  // namespace
}  // namespace painworth
