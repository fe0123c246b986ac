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

#include "painworth/sensitivity.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "painworth/valuation.hpp"

namespace painworth {

namespace {

constexpr std::string_view kPainPrefix = "pain(";
constexpr std::string_view kLinePrefix = ").line(";

[[noreturn]] void malformed(std::string_view text) {
  throw Error(Errc::PathNotFound,
              "malformed parameter path '" + std::string(text) +
                  "'; expected pain(<id>).line(<agent>).{frequency|impact|alleviation}");
}

ImpactLine* find_line(Portfolio& p, const ParamPath& path) {
  for (auto& pain : p.pains) {
    if (pain.id != path.pain_id) continue;
    for (auto& line : pain.lines) {
      if (line.agent == path.agent) return &line;
    }
  }
  return nullptr;
}

const ImpactLine& require_line(const Portfolio& p, const ParamPath& path) {
  const Pain* pain = p.find_pain(path.pain_id);
  if (pain != nullptr) {
    for (const auto& line : pain->lines) {
      if (line.agent == path.agent) return line;
    }
  }
  throw Error(Errc::PathNotFound, "no scalar at '" + path.to_string() + "'");
}

Money v_economic(const Portfolio& p) { return evaluate_portfolio(p).total_effective; }

// Snaps a value to the field's storage grid (cents for impact).
Decimal quantize(ParamField field, Decimal value, Currency currency) {
  if (field == ParamField::Impact) return Money::from_decimal(value, currency).to_decimal();
  return value;
}

Decimal scale(Decimal value, std::int64_t factor_nanos) {
  return Decimal::from_nanos(
      round_half_even(checked_mul(value.nanos(), factor_nanos), Decimal::kOne));
}

}  // namespace

std::string_view to_string(ParamField f) {
  switch (f) {
    case ParamField::Frequency: return "frequency";
    case ParamField::Impact: return "impact";
    case ParamField::Alleviation: return "alleviation";
  }
  return "";
}

ParamPath ParamPath::parse(std::string_view text) {
  if (!text.starts_with(kPainPrefix)) malformed(text);
  const std::size_t id_begin = kPainPrefix.size();
  const std::size_t id_end = text.find(kLinePrefix, id_begin);
  if (id_end == std::string_view::npos || id_end == id_begin) malformed(text);

  ParamPath path;
  auto id_text = text.substr(id_begin, id_end - id_begin);
  auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), path.pain_id);
  if (ec != std::errc() || ptr != id_text.data() + id_text.size()) malformed(text);

  const std::size_t agent_begin = id_end + kLinePrefix.size();
  const std::size_t agent_end = text.rfind(").");
  if (agent_end == std::string_view::npos || agent_end <= agent_begin) malformed(text);
  path.agent = std::string(text.substr(agent_begin, agent_end - agent_begin));

  auto field = text.substr(agent_end + 2);
  if (field == "frequency") {
    path.field = ParamField::Frequency;
  } else if (field == "impact") {
    path.field = ParamField::Impact;
  } else if (field == "alleviation") {
    path.field = ParamField::Alleviation;
  } else {
    malformed(text);
  }
  return path;
}

std::string ParamPath::to_string() const {
  return "pain(" + std::to_string(pain_id) + ").line(" + agent + ")." +
         std::string(painworth::to_string(field));
}

Decimal read_param(const Portfolio& p, const ParamPath& path) {
  const ImpactLine& line = require_line(p, path);
  switch (path.field) {
    case ParamField::Frequency: return line.frequency.per_year();
    case ParamField::Impact: return line.impact.to_decimal();
    case ParamField::Alleviation: return line.alleviation.omega();
  }
  return {};
}

Portfolio with_param(const Portfolio& p, const ParamPath& path, Decimal value) {
  require_line(p, path);
  Portfolio out = p;
  ImpactLine& line = *find_line(out, path);
  const std::string where = " at '" + path.to_string() + "'";
  switch (path.field) {
    case ParamField::Frequency: {
      auto rate = Rate::make(value);
      if (!rate) throw Error(Errc::DomainViolation, "frequency " + value.to_string() + " < 0" + where);
      line.frequency = *rate;
      break;
    }
    case ParamField::Impact: {
      Money impact = Money::from_decimal(value, p.currency);
      if (impact.cents() < 0) throw Error(Errc::DomainViolation, "impact " + value.to_string() + " < 0" + where);
      line.impact = impact;
      break;
    }
    case ParamField::Alleviation: {
      auto omega = Alleviation::make(value);
      if (!omega) {
        throw Error(Errc::DomainViolation, "alleviation " + value.to_string() + " outside [0, 1]" + where);
      }
      line.alleviation = *omega;
      // An explicit omega supersedes whatever annotation produced the old one.
      line.confusion.reset();
      line.investment.reset();
      break;
    }
  }
  return out;
}

std::vector<ParamPath> enumerate_paths(const Portfolio& p) {
  std::vector<const Pain*> pains;
  for (const auto& pain : p.pains) pains.push_back(&pain);
  std::sort(pains.begin(), pains.end(), [](const Pain* a, const Pain* b) { return a->id < b->id; });

  std::vector<ParamPath> out;
  for (const Pain* pain : pains) {
    std::vector<std::string> agents;
    for (const auto& line : pain->lines) agents.push_back(line.agent);
    std::sort(agents.begin(), agents.end());
    for (const auto& agent : agents) {
      for (auto f : {ParamField::Frequency, ParamField::Impact, ParamField::Alleviation}) {
        out.push_back({pain->id, agent, f});
      }
    }
  }
  return out;
}

SweepCurve sweep(const Portfolio& p, const ParamPath& path, Decimal from, Decimal to, int steps) {
  require_line(p, path);
  if (steps < 2) throw Error(Errc::DomainViolation, "sweep needs steps >= 2");
  if (!(from < to)) {
    throw Error(Errc::DomainViolation,
                "sweep range [" + from.to_string() + ", " + to.to_string() + "] must have from < to");
  }
  // Endpoints in domain imply every interior point is; with_param checks too.
  with_param(p, path, from);
  with_param(p, path, to);

  SweepCurve curve{path, {}};
  const __int128 width = static_cast<__int128>(to.nanos()) - from.nanos();
  for (int k = 0; k < steps; ++k) {
    const auto offset = round_half_even(checked_mul(width, k), steps - 1);
    Decimal value = quantize(path.field, Decimal::from_nanos(from.nanos() + offset), p.currency);
    if (!curve.points.empty() && !(curve.points.back().value < value)) {
      throw Error(Errc::DomainViolation, "sweep points collapse at the field's resolution");
    }
    curve.points.push_back({value, v_economic(with_param(p, path, value))});
  }
  return curve;
}

Breakeven breakeven_scale(const Portfolio& p, Money annualized_cost) {
  if (annualized_cost.currency() != p.currency) {
    throw Error(Errc::CurrencyMismatch, "cost currency differs from portfolio currency");
  }
  if (annualized_cost.cents() < 0) throw Error(Errc::DomainViolation, "cost must be nonnegative");

  const ValuationReport r = evaluate_portfolio(p);
  const std::int64_t total = r.total_effective.cents();
  if (total <= 0) {
    throw Error(Errc::ZeroValuePortfolio, "portfolio creates no effective value; nothing to scale");
  }
  // lambda * omega <= 1 must hold on every line; the largest omega binds.
  std::int64_t max_omega = 0;
  for (const auto& line : r.lines) max_omega = std::max(max_omega, line.alleviation.omega().nanos());

  Breakeven b;
  b.lambda_max = static_cast<double>(Decimal::kOne) / static_cast<double>(max_omega);
  b.value_cap = Money(round_half_even(checked_mul(total, Decimal::kOne), max_omega), p.currency);
  // cost <= lambda_max * total  <=>  cost * max_omega <= total * 1e9, exactly.
  b.reachable = checked_mul(annualized_cost.cents(), max_omega) <= checked_mul(total, Decimal::kOne);
  b.lambda = b.reachable ? static_cast<double>(annualized_cost.cents()) / static_cast<double>(total) : 0.0;
  return b;
}

std::vector<TornadoEntry> tornado(const Portfolio& p, Decimal rel) {
  if (rel.nanos() <= 0 || rel.nanos() >= Decimal::kOne) {
    throw Error(Errc::DomainViolation, "tornado rel must lie in (0, 1), got " + rel.to_string());
  }
  const Money base_value = v_economic(p);
  const Decimal one = Decimal::from_nanos(Decimal::kOne);
  std::vector<TornadoEntry> out;
  for (const auto& path : enumerate_paths(p)) {
    TornadoEntry e{path, read_param(p, path), {}, {}, {}, {}};
    e.low = quantize(path.field, scale(e.base, Decimal::kOne - rel.nanos()), p.currency);
    e.high = quantize(path.field, scale(e.base, Decimal::kOne + rel.nanos()), p.currency);
    if (path.field == ParamField::Alleviation) e.high = std::min(e.high, one);
    e.delta_low = v_economic(with_param(p, path, e.low)) - base_value;
    e.delta_high = v_economic(with_param(p, path, e.high)) - base_value;
    out.push_back(std::move(e));
  }
  auto swing = [](const TornadoEntry& e) {
    return std::max(std::abs(e.delta_low.cents()), std::abs(e.delta_high.cents()));
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const TornadoEntry& a, const TornadoEntry& b) { return swing(a) > swing(b); });
  return out;
}

}  // namespace painworth
