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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "painworth/domain.hpp"

// What-if analysis over a portfolio. A ParamPath addresses one scalar:
//
//   pain(<id>).line(<agent>).frequency     occurrences per year
//   pain(<id>).line(<agent>).impact        major currency units per occurrence
//   pain(<id>).line(<agent>).alleviation   in [0, 1]
//
// All functions leave the input portfolio untouched and evaluate patched
// copies, so every reported number can be reproduced by a fresh evaluation.

namespace painworth {

enum class ParamField { Frequency, Impact, Alleviation };

std::string_view to_string(ParamField f);

struct ParamPath {
  std::int64_t pain_id = 0;
  std::string agent;
  ParamField field = ParamField::Frequency;

  /// Throws Error(PathNotFound) on malformed text.
  static ParamPath parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const ParamPath&) const = default;
};

/// Throws Error(PathNotFound) when the pain or line does not exist.
Decimal read_param(const Portfolio& p, const ParamPath& path);

/// Copy of `p` with one scalar replaced. Throws Error(PathNotFound) or
/// Error(DomainViolation); out-of-domain values are rejected, never clamped.
Portfolio with_param(const Portfolio& p, const ParamPath& path, Decimal value);

/// Every addressable scalar: pains by id, lines by agent id, then frequency,
/// impact, alleviation.
std::vector<ParamPath> enumerate_paths(const Portfolio& p);

struct SweepPoint {
  Decimal value;
  Money v_economic;
};

struct SweepCurve {
  ParamPath path;
  std::vector<SweepPoint> points;
};

/// `steps` equally spaced values from `from` to `to` inclusive. Requires
/// steps >= 2, from < to and both ends inside the field's domain; otherwise
/// Error(DomainViolation).
SweepCurve sweep(const Portfolio& p, const ParamPath& path, Decimal from, Decimal to, int steps);

struct Breakeven {
  bool reachable = false;
  double lambda = 0.0;      // cost / total_effective when reachable
  double lambda_max = 0.0;  // largest uniform scale keeping every omega <= 1
  Money value_cap;          // total effective value at lambda_max
};

/// Uniform scale of all alleviation factors at which effective value equals
/// `annualized_cost`. Throws Error(ZeroValuePortfolio) when total effective
/// value is zero and Error(DomainViolation) for a negative cost.
Breakeven breakeven_scale(const Portfolio& p, Money annualized_cost);

struct TornadoEntry {
  ParamPath path;
  Decimal base;
  Decimal low;
  Decimal high;
  Money delta_low;   // v_economic(low) - v_economic(base)
  Money delta_high;  // v_economic(high) - v_economic(base)
};

/// Perturbs each scalar to (1 - rel) and (1 + rel) times its value, omega
/// capped at 1. Sorted by largest absolute delta, ties in path order.
/// Throws Error(DomainViolation) unless 0 < rel < 1.
std::vector<TornadoEntry> tornado(const Portfolio& p, Decimal rel);

}  // namespace painworth
