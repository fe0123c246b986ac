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
#include <fstream>
#include <random>
#include <sstream>

#include "painworth/demo.hpp"
#include "painworth/portfolio_io.hpp"
#include "painworth/report.hpp"
#include "painworth/valuation.hpp"
#include "support/test_support.hpp"

namespace painworth {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kData = PAINWORTH_DATA_DIR;

bool has_issue(const ValidationResult& r, Errc code) {
  return std::any_of(r.issues.begin(), r.issues.end(), [&](const Issue& i) { return i.code == code; });
}

TEST(Fixtures, BundledFilesAreCanonical) {
  EXPECT_EQ(read_file(kData + "/demo.json"), demo_fixture_json());
  EXPECT_EQ(read_file(kData + "/demo.csv"), serialize_portfolio(demo_portfolio(), PortfolioFormat::Csv));
}

TEST(Fixtures, BundledDemoParses) {
  const Portfolio p = parse_portfolio(read_file(kData + "/demo.json"), PortfolioFormat::Json).value();
  EXPECT_EQ(p, demo_portfolio());
  EXPECT_EQ(p.pains.size(), 4u);
}

TEST(Fixtures, CsvAndJsonEvaluateIdentically) {
  const Portfolio j = parse_portfolio(read_file(kData + "/demo.json"), PortfolioFormat::Json).value();
  const Portfolio c = parse_portfolio(read_file(kData + "/demo.csv"), PortfolioFormat::Csv).value();
  EXPECT_EQ(j, c);
  EXPECT_EQ(render_report(evaluate(j), ReportFormat::Json), render_report(evaluate(c), ReportFormat::Json));
}

TEST(Json, SyntaxErrorHasLocus) {
  const auto r = parse_portfolio("{\n  \"id\": \"x\",\n  oops\n}", PortfolioFormat::Json);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.issues[0].code, Errc::SyntaxError);
  EXPECT_NE(r.issues[0].locus.find("line 3"), std::string::npos) << r.issues[0].locus;
}

TEST(Json, MoneyMustBeString) {
  auto doc = nlohmann::json::parse(demo_fixture_json());
  doc["pains"][0]["lines"][0]["impact"] = 50.0;
  const auto r = portfolio_from_json(doc);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_issue(r, Errc::SyntaxError));
}

TEST(Json, MissingFields) {
  const auto r = parse_portfolio(R"({"currency": "EUR", "agents": [], "pains": []})", PortfolioFormat::Json);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_issue(r, Errc::MissingField));
}

TEST(Json, EmptyPainsList) {
  const auto r = parse_portfolio(
      R"({"id": "e", "currency": "EUR", "agents": [{"id": "c", "label": "C", "beneficiary": true, "side": "customer"}],
          "pains": [], "pricing": {"revenue_share": "0.5"}})",
      PortfolioFormat::Json);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(evaluate_portfolio(*r.portfolio).total_effective.cents(), 0);
}

TEST(Csv, CommaDecimalIsSyntaxError) {
  std::string csv = serialize_portfolio(demo_portfolio(), PortfolioFormat::Csv);
  const auto pos = csv.find(",50.00,");
  ASSERT_NE(pos, std::string::npos);
  csv.replace(pos, 7, ",50,00,");
  const auto r = parse_portfolio(csv, PortfolioFormat::Csv);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.issues[0].code, Errc::SyntaxError);
  EXPECT_NE(r.issues[0].locus.find("line"), std::string::npos) << r.issues[0].locus;
}

TEST(Csv, QuotedCommaImpactIsSyntaxError) {
  std::string csv = serialize_portfolio(demo_portfolio(), PortfolioFormat::Csv);
  csv.replace(csv.find(",50.00,"), 7, ",\"50,00\",");
  const auto r = parse_portfolio(csv, PortfolioFormat::Csv);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.issues[0].code, Errc::SyntaxError);
}

TEST(Csv, ValidationIssuesCarryRowLocus) {
  std::string csv = serialize_portfolio(demo_portfolio(), PortfolioFormat::Csv);
  csv.replace(csv.find(",0.6,"), 5, ",1.6,");
  const auto r = parse_portfolio(csv, PortfolioFormat::Csv);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.issues[0].code, Errc::OmegaOutOfRange);
  EXPECT_NE(r.issues[0].locus.find("line"), std::string::npos) << r.issues[0].locus;
}

TEST(Csv, WrongHeader) {
  const auto r = parse_portfolio("# id: x\n# currency: EUR\npain,kind\n", PortfolioFormat::Csv);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.issues[0].code, Errc::SyntaxError);
}

TEST(Csv, AgentsInferredWithoutDirectives) {
  const std::string csv =
      "# id: tiny\n# currency: EUR\n"
      "pain_id,kind,description,agent,frequency_per_year,impact,alleviation,note\n"
      "1,operational,Slow,customer,25,50.00,0.8,\n";
  const Portfolio p = parse_portfolio(csv, PortfolioFormat::Csv).value();
  ASSERT_EQ(p.agents.size(), 1u);
  EXPECT_EQ(evaluate_portfolio(p).total_effective, testing::eur_amount("1000"));
}

TEST(RoundTrip, FixedPointForRandomPortfolios) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 200; ++i) {
    RawPortfolio raw = to_raw(testing::random_portfolio(rng));
    raw.pains.front().description = "needs \"quoting\", really";
    raw.pains.front().lines.front().note = "comma, quote \" and\nnewline";
    if (i % 2 == 0) raw.cost_model = RawCostModel{"cost_model", testing::eur_amount("1000"), testing::eur_amount("12.5"), 3};
    const Portfolio p = validate_portfolio(raw).value();
    for (auto fmt : {PortfolioFormat::Json, PortfolioFormat::Csv}) {
      const std::string once = serialize_portfolio(p, fmt);
      const Portfolio back = parse_portfolio(once, fmt).value();
      EXPECT_EQ(back, p);
      EXPECT_EQ(serialize_portfolio(back, fmt), once);
    }
  }
}

TEST(RoundTrip, AnnotationsSurviveJson) {
  auto doc = nlohmann::json::parse(demo_fixture_json());
  doc["pains"][0]["lines"][0].erase("alleviation");
  doc["pains"][0]["lines"][0]["confusion"] = {{"tp", 8}, {"fp", 1}, {"fn", 2}, {"tn", 3}};
  doc["pains"][1]["lines"][0].erase("alleviation");
  doc["pains"][1]["lines"][0]["investment"] = {{"omega_max", "0.9"}, {"kappa", "2000.00"}, {"spend", "1500.00"}};
  const Portfolio p = portfolio_from_json(doc).value();
  const std::string text = serialize_portfolio(p, PortfolioFormat::Json);
  EXPECT_EQ(parse_portfolio(text, PortfolioFormat::Json).value(), p);
}

TEST(Decimals, NoBinaryFloatingPoint) {
  auto doc = nlohmann::json::parse(demo_fixture_json());
  doc["pains"][0]["lines"][0]["impact"] = "0.10";
  doc["pains"][0]["lines"][0]["frequency"] = "1";
  doc["pains"][0]["lines"][0]["alleviation"] = "1";
  doc["pains"][0]["lines"][1]["impact"] = "0.20";
  doc["pains"][0]["lines"][1]["frequency"] = "1";
  doc["pains"][0]["lines"][1]["alleviation"] = "1";
  const auto r = evaluate_portfolio(portfolio_from_json(doc).value());
  EXPECT_EQ(r.pains[0].effective, testing::eur_amount("0.30"));
}

}  // namespace
}  // namespace painworth
