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

#include <json.hpp>

#include "painworth/demo.hpp"
#include "painworth/report.hpp"
#include "painworth/valuation.hpp"
#include "support/test_support.hpp"

namespace painworth {
namespace {

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(Table, SubtotalRowAbovePains) {
  const std::string t = render_report(evaluate(demo_portfolio()), ReportFormat::Table);
  const auto subtotal = t.find("6'520 | 4'700");
  ASSERT_NE(subtotal, std::string::npos) << t;
  const auto pain1 = t.find("Missing information");
  const auto pain3 = t.find("Machine break downs");
  EXPECT_LT(subtotal, pain1);
  EXPECT_LT(subtotal, pain3);
  const auto structural = t.find("1'260 | 600");
  ASSERT_NE(structural, std::string::npos);
  EXPECT_LT(pain3, structural);
  EXPECT_LT(structural, t.find("Recurring revenue"));
  EXPECT_TRUE(contains(t, "1 hour search time"));
  EXPECT_TRUE(contains(t, "13'080.00"));
}

TEST(Table, OperationalTotals) {
  const std::string t =
      render_report(evaluate(filter_by_kind(demo_portfolio(), PainKind::Operational)), ReportFormat::Table);
  EXPECT_TRUE(contains(t, "11'220"));
  EXPECT_FALSE(contains(t, "Recurring revenue"));
}

TEST(Table, EmptyPortfolio) {
  RawPortfolio raw = to_raw(demo_portfolio());
  raw.pains.clear();
  const std::string t = render_report(evaluate(validate_portfolio(raw).value()), ReportFormat::Table);
  EXPECT_TRUE(contains(t, "Pain"));
  EXPECT_TRUE(contains(t, "0.00"));
}

TEST(Markdown, GroupedLikeTable) {
  const std::string m = render_report(evaluate(demo_portfolio()), ReportFormat::Markdown);
  EXPECT_TRUE(contains(m, "6'520"));
  EXPECT_TRUE(contains(m, "4'700"));
  EXPECT_TRUE(contains(m, "|"));
  EXPECT_LT(m.find("6'520"), m.find("Missing information"));
}

TEST(Json, LosslessAndUngrouped) {
  const std::string j = render_report(evaluate(demo_portfolio()), ReportFormat::Json);
  EXPECT_TRUE(contains(j, "\"total_effective\": \"13080.00\""));
  EXPECT_TRUE(contains(j, "\"price_ceiling\": \"13080.00\""));
  EXPECT_FALSE(contains(j, "'"));
  const auto doc = nlohmann::json::parse(j);
  EXPECT_EQ(doc["lines"].size(), 7u);
  EXPECT_EQ(doc["per_kind"][0]["agents"][0]["effective"], "6520.00");
  EXPECT_EQ(doc["per_kind"][0]["agents"][1]["effective"], "4700.00");
  EXPECT_EQ(doc["economic"]["v_economic"], "13080.00");
  EXPECT_EQ(doc["fee_quote"]["fee"], "6540.00");
}

TEST(Csv, RoundTripsNumerically) {
  const auto e = evaluate(demo_portfolio());
  const std::string c = render_report(e, ReportFormat::Csv);
  EXPECT_FALSE(contains(c, "'"));
  EXPECT_TRUE(contains(c, "price_ceiling,13080.00"));
  // Every line value reappears as an ungrouped decimal that parses back exactly.
  for (const auto& l : e.report.lines) {
    EXPECT_TRUE(contains(c, "," + l.effective.to_string() + "\n")) << l.effective.to_string();
    EXPECT_EQ(Money::parse(l.effective.to_string(), e.report.currency), l.effective);
  }
}

TEST(Output, ByteStable) {
  for (auto fmt : {ReportFormat::Json, ReportFormat::Csv, ReportFormat::Table, ReportFormat::Markdown}) {
    EXPECT_EQ(render_report(evaluate(demo_portfolio()), fmt), render_report(evaluate(demo_portfolio()), fmt));
  }
}

}  // namespace
}  // namespace painworth
