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

#include <cmath>
#include <random>

#include "painworth/demo.hpp"
#include "painworth/sensitivity.hpp"
#include "painworth/valuation.hpp"
#include "support/test_support.hpp"

namespace painworth {
namespace {

using testing::dec;
using testing::eur;
using testing::eur_amount;

Portfolio operational() { return filter_by_kind(demo_portfolio(), PainKind::Operational); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::IoError;
}

TEST(ParamPath, ParseAndPrint) {
  const auto path = ParamPath::parse("pain(2).line(customer).alleviation");
  EXPECT_EQ(path.pain_id, 2);
  EXPECT_EQ(path.agent, "customer");
  EXPECT_EQ(path.field, ParamField::Alleviation);
  EXPECT_EQ(path.to_string(), "pain(2).line(customer).alleviation");
  for (const char* bad : {"", "pain(2)", "pain(x).line(customer).impact", "pain(2).line().impact",
                          "pain(2).line(customer).omega", "pain(2).line(customer).impact.x"}) {
    EXPECT_EQ(code_of([&] { ParamPath::parse(bad); }), Errc::PathNotFound) << bad;
  }
}

TEST(ParamPath, ReadAndPatch) {
  const Portfolio p = demo_portfolio();
  EXPECT_EQ(read_param(p, ParamPath::parse("pain(3).line(provider).impact")), dec("1000"));
  EXPECT_EQ(read_param(p, ParamPath::parse("pain(1).line(customer).frequency")), dec("25"));
  EXPECT_EQ(code_of([&] { read_param(p, ParamPath::parse("pain(2).line(provider).impact")); }),
            Errc::PathNotFound);
  EXPECT_EQ(code_of([&] { read_param(p, ParamPath::parse("pain(9).line(customer).impact")); }),
            Errc::PathNotFound);

  const auto w = ParamPath::parse("pain(2).line(customer).alleviation");
  const Portfolio q = with_param(p, w, dec("0.8"));
  EXPECT_EQ(read_param(q, w), dec("0.8"));
  EXPECT_EQ(read_param(p, w), dec("0.6"));
  EXPECT_EQ(evaluate_portfolio(q).total_effective - evaluate_portfolio(p).total_effective, eur_amount("1000"));

  EXPECT_EQ(code_of([&] { with_param(p, w, dec("1.5")); }), Errc::DomainViolation);
  EXPECT_EQ(code_of([&] { with_param(p, ParamPath::parse("pain(2).line(customer).frequency"), dec("-1")); }),
            Errc::DomainViolation);
  EXPECT_EQ(code_of([&] { with_param(p, ParamPath::parse("pain(2).line(customer).impact"), dec("-0.01")); }),
            Errc::DomainViolation);
}

TEST(ParamPath, Enumeration) {
  const auto paths = enumerate_paths(demo_portfolio());
  ASSERT_EQ(paths.size(), 21u);
  EXPECT_EQ(paths[0].to_string(), "pain(1).line(customer).frequency");
  EXPECT_EQ(paths[20].to_string(), "pain(4).line(provider).alleviation");
}

TEST(Sweep, OperationalAlleviation) {
  const auto curve = sweep(operational(), ParamPath::parse("pain(2).line(customer).alleviation"), dec("0"),
                           dec("1"), 11);
  ASSERT_EQ(curve.points.size(), 11u);
  for (int k = 0; k < 11; ++k) {
    EXPECT_EQ(curve.points[k].value.nanos(), k * Decimal::kOne / 10);
    EXPECT_EQ(curve.points[k].v_economic, Money(822'000 + k * 50'000, eur()));
  }
  EXPECT_EQ(curve.points[6].v_economic, eur_amount("11220"));
}

TEST(Sweep, FullDemoPassesThroughEvaluation) {
  const auto curve = sweep(demo_portfolio(), ParamPath::parse("pain(2).line(customer).alleviation"), dec("0"),
                           dec("1"), 11);
  EXPECT_EQ(curve.points[6].v_economic, eur_amount("13080"));
}

TEST(Sweep, Rejections) {
  const Portfolio p = demo_portfolio();
  const auto w = ParamPath::parse("pain(2).line(customer).alleviation");
  EXPECT_EQ(code_of([&] { sweep(p, w, dec("0.5"), dec("0.5"), 5); }), Errc::DomainViolation);
  EXPECT_EQ(code_of([&] { sweep(p, w, dec("0"), dec("1"), 1); }), Errc::DomainViolation);
  EXPECT_EQ(code_of([&] { sweep(p, w, dec("0"), dec("1.5"), 3); }), Errc::DomainViolation);
  EXPECT_EQ(code_of([&] { sweep(p, w, dec("1"), dec("0"), 3); }), Errc::DomainViolation);
  EXPECT_EQ(code_of([&] { sweep(p, ParamPath::parse("pain(7).line(customer).impact"), dec("0"), dec("1"), 3); }),
            Errc::PathNotFound);
}

TEST(Sweep, FrequencyIsAffine) {
  const auto curve = sweep(operational(), ParamPath::parse("pain(2).line(customer).frequency"), dec("0"),
                           dec("50"), 26);
  for (std::size_t k = 2; k < curve.points.size(); ++k) {
    const auto d2 = curve.points[k].v_economic.cents() - 2 * curve.points[k - 1].v_economic.cents() +
                    curve.points[k - 2].v_economic.cents();
    EXPECT_EQ(d2, 0);
  }
  EXPECT_EQ(curve.points.back().v_economic, eur_amount("11220"));
  EXPECT_EQ(curve.points.front().v_economic, eur_amount("8220"));
}

TEST(Sweep, PointsMatchFreshEvaluationAndAreAffine) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 100; ++i) {
    const Portfolio p = testing::random_portfolio(rng);
    const auto paths = enumerate_paths(p);
    const auto path = paths[std::uniform_int_distribution<std::size_t>(0, paths.size() - 1)(rng)];
    Decimal from = dec("0"), to = dec("1");
    if (path.field == ParamField::Frequency) to = dec("37.5");
    const int steps = static_cast<int>(std::uniform_int_distribution<int>(2, 17)(rng));
    // Impacts are cents; keep every grid value on a whole cent.
    if (path.field == ParamField::Impact) to = Decimal::from_integer(12 * (steps - 1));
    const auto curve = sweep(p, path, from, to, steps);
    ASSERT_EQ(curve.points.size(), static_cast<std::size_t>(steps));
    for (const auto& pt : curve.points) {
      EXPECT_EQ(pt.v_economic, evaluate_portfolio(with_param(p, path, pt.value)).total_effective);
    }
    EXPECT_EQ(read_param(p, path), read_param(p, path));  // input untouched
    // Equal spacing makes the curve affine up to per-point cent rounding.
    for (std::size_t k = 2; k < curve.points.size(); ++k) {
      const auto d2 = curve.points[k].v_economic.cents() - 2 * curve.points[k - 1].v_economic.cents() +
                      curve.points[k - 2].v_economic.cents();
      EXPECT_LE(std::llabs(d2), 4) << path.to_string();
    }
  }
}

TEST(Breakeven, DemoOperational) {
  const auto b = breakeven_scale(operational(), eur_amount("5610"));
  EXPECT_TRUE(b.reachable);
  EXPECT_DOUBLE_EQ(b.lambda, 0.5);
  EXPECT_DOUBLE_EQ(b.lambda_max, 1.25);
  EXPECT_EQ(b.value_cap, eur_amount("14025"));

  const auto zero = breakeven_scale(operational(), eur_amount("0"));
  EXPECT_TRUE(zero.reachable);
  EXPECT_EQ(zero.lambda, 0.0);

  const auto far = breakeven_scale(operational(), eur_amount("20000"));
  EXPECT_FALSE(far.reachable);
  EXPECT_EQ(far.value_cap, eur_amount("14025"));

  EXPECT_TRUE(breakeven_scale(operational(), eur_amount("14025")).reachable);
  EXPECT_FALSE(breakeven_scale(operational(), eur_amount("14025.01")).reachable);
  EXPECT_DOUBLE_EQ(breakeven_scale(demo_portfolio(), eur_amount("6540")).lambda, 0.5);
}

TEST(Breakeven, Rejections) {
  RawPortfolio raw = to_raw(demo_portfolio());
  for (auto& pain : raw.pains) {
    for (auto& line : pain.lines) line.alleviation = Decimal{};
  }
  const Portfolio none = validate_portfolio(raw).value();
  EXPECT_EQ(code_of([&] { breakeven_scale(none, eur_amount("1")); }), Errc::ZeroValuePortfolio);
  EXPECT_EQ(code_of([&] { breakeven_scale(demo_portfolio(), eur_amount("-1")); }), Errc::DomainViolation);
}

TEST(Breakeven, ClosedFormAgreesWithGrid) {
  std::mt19937_64 rng(59);
  int checked = 0;
  while (checked < 100) {
    const Portfolio p = testing::random_portfolio(rng);
    const auto r = evaluate_portfolio(p);
    long double max_w = 0;
    for (const auto& l : r.lines) max_w = std::max<long double>(max_w, l.alleviation.omega().to_double());
    if (max_w < 0.2L) continue;
    ++checked;
    const long double cap = r.total_effective.cents() / 100.0L / max_w;
    const Money cost(static_cast<std::int64_t>(
                         std::uniform_real_distribution<double>(0.0, 1.2)(rng) * static_cast<double>(cap) * 100),
                     eur());
    const auto b = breakeven_scale(p, cost);

    // Smallest grid lambda whose scaled value covers the cost, if any is feasible.
    const long double step = 1e-4L;
    std::optional<long double> grid;
    for (long k = 0;; ++k) {
      const long double lambda = k * step;
      if (lambda * max_w > 1.0L) break;
      long double value = 0;
      for (const auto& l : r.lines) {
        value += l.frequency.per_year().to_double() * (l.impact.cents() / 100.0L) * lambda *
                 l.alleviation.omega().to_double();
      }
      if (value * 100.0L >= cost.cents() - 1e-6L) {
        grid = lambda;
        break;
      }
    }
    if (grid) {
      ASSERT_TRUE(b.reachable);
      EXPECT_LE(std::fabs(static_cast<double>(*grid) - b.lambda), 1e-4 + 1e-12);
      EXPECT_LE(std::fabs(b.lambda * r.total_effective.cents() - cost.cents()), 1.0);
    } else if (b.reachable) {
      // Only the last partial grid step may hold the breakeven point.
      EXPECT_LE(b.lambda_max - b.lambda, 1e-4);
    }
  }
}

TEST(Tornado, DemoRanking) {
  const auto entries = tornado(demo_portfolio(), dec("0.2"));
  ASSERT_EQ(entries.size(), 21u);
  EXPECT_EQ(entries[0].path.to_string(), "pain(3).line(provider).frequency");
  EXPECT_EQ(entries[1].path.to_string(), "pain(3).line(provider).impact");
  EXPECT_EQ(entries[0].delta_high, eur_amount("840"));
  EXPECT_EQ(entries[0].delta_low, eur_amount("-840"));
  for (std::size_t i = 1; i < entries.size(); ++i) {
    auto swing = [](const TornadoEntry& e) {
      return std::max(std::llabs(e.delta_low.cents()), std::llabs(e.delta_high.cents()));
    };
    EXPECT_GE(swing(entries[i - 1]), swing(entries[i]));
  }
}

TEST(Tornado, BruteForceDeltas) {
  const Portfolio p = demo_portfolio();
  const Money base = evaluate_portfolio(p).total_effective;
  for (const auto& e : tornado(p, dec("0.1"))) {
    EXPECT_EQ(e.delta_low, evaluate_portfolio(with_param(p, e.path, e.low)).total_effective - base);
    EXPECT_EQ(e.delta_high, evaluate_portfolio(with_param(p, e.path, e.high)).total_effective - base);
    EXPECT_LE(std::llabs(e.delta_high.cents() + e.delta_low.cents()), 1) << e.path.to_string();
  }
}

TEST(Tornado, CapsAlleviationAtOne) {
  const Portfolio p = with_param(demo_portfolio(), ParamPath::parse("pain(1).line(customer).alleviation"), dec("0.9"));
  for (const auto& e : tornado(p, dec("0.2"))) {
    if (e.path.to_string() == "pain(1).line(customer).alleviation") {
      EXPECT_EQ(e.high, dec("1"));
      EXPECT_EQ(e.low, dec("0.72"));
    }
  }
}

TEST(Tornado, EdgeCases) {
  RawPortfolio raw = to_raw(demo_portfolio());
  raw.pains = {raw.pains[1]};
  EXPECT_EQ(tornado(validate_portfolio(raw).value(), dec("0.2")).size(), 3u);
  raw = to_raw(demo_portfolio());
  for (auto& pain : raw.pains) {
    for (auto& line : pain.lines) line.impact = Money::zero(eur());
  }
  for (const auto& e : tornado(validate_portfolio(raw).value(), dec("0.2"))) {
    EXPECT_EQ(e.delta_low.cents(), 0);
    EXPECT_EQ(e.delta_high.cents(), 0);
  }
  EXPECT_EQ(code_of([] { tornado(demo_portfolio(), dec("0")); }), Errc::DomainViolation);
  EXPECT_EQ(code_of([] { tornado(demo_portfolio(), dec("1")); }), Errc::DomainViolation);
}

}  // namespace
}  // namespace painworth
