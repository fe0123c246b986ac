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

#include "painworth/money.hpp"
#include "painworth/quantities.hpp"

// Alleviation factors derived from detector quality or from spend on data
// quality. A missed pain occurrence lowers omega; a false alarm costs money
// but resolves nothing, so it is priced as operating overhead instead.

namespace painworth {

struct ConfusionCounts {
  std::int64_t tp = 0;  // real occurrence, detected
  std::int64_t fp = 0;  // false alarm
  std::int64_t fn = 0;  // real occurrence, missed
  std::int64_t tn = 0;

  bool operator==(const ConfusionCounts&) const = default;
};

/// omega(spend) = omega_max * (1 - exp(-spend / kappa)).
class InvestmentCurve {
 public:
  /// Throws Error(InvalidArgument) unless omega_max > 0 and kappa > 0.
  static InvestmentCurve make(Alleviation omega_max, Money kappa);

  Alleviation omega_max() const { return omega_max_; }
  Money kappa() const { return kappa_; }
  bool operator==(const InvestmentCurve&) const = default;

 private:
  InvestmentCurve(Alleviation omega_max, Money kappa) : omega_max_(omega_max), kappa_(kappa) {}

  Alleviation omega_max_;
  Money kappa_;
};

/// Recall, tp / (tp + fn), rounded half-even to nine digits.
/// Throws Error(NoPositives) when tp + fn == 0, Error(InvalidArgument) on
/// negative counts.
Alleviation omega_from_confusion(const ConfusionCounts& counts);

/// fp * cost_per_false_alarm / window_years, half-even to the cent.
/// Throws Error(InvalidArgument) unless window_years > 0.
Money false_positive_overhead(const ConfusionCounts& counts, Money cost_per_false_alarm,
                              Decimal window_years);

/// Throws Error(DomainViolation) for negative spend or a currency other than
/// the curve's.
Alleviation omega_from_investment(const InvestmentCurve& curve, Money spend);

/// Inverse of the curve, -kappa * ln(1 - target / omega_max), rounded up to
/// the cent so that omega_from_investment of the result reaches `target`.
/// Throws Error(Unreachable) when target >= omega_max.
Money required_investment(const InvestmentCurve& curve, Alleviation target);

}  // namespace painworth
