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

#include "painworth/alleviation.hpp"

#include <algorithm>
#include <cmath>

#include "painworth/error.hpp"

namespace painworth {

InvestmentCurve InvestmentCurve::make(Alleviation omega_max, Money kappa) {
  if (omega_max.omega().nanos() <= 0) {
    throw Error(Errc::InvalidArgument, "investment curve needs omega_max > 0");
  }
  if (kappa.cents() <= 0) {
    throw Error(Errc::InvalidArgument, "investment curve needs kappa > 0");
  }
  return InvestmentCurve(omega_max, kappa);
}

Alleviation omega_from_confusion(const ConfusionCounts& counts) {
  if (counts.tp < 0 || counts.fp < 0 || counts.fn < 0 || counts.tn < 0) {
    throw Error(Errc::InvalidArgument, "confusion counts must be nonnegative");
  }
  __int128 positives = static_cast<__int128>(counts.tp) + counts.fn;
  if (positives == 0) {
    throw Error(Errc::NoPositives, "tp + fn is zero; recall undefined");
  }
  auto nanos = round_half_even(checked_mul(counts.tp, Decimal::kOne), positives);
  return *Alleviation::make(Decimal::from_nanos(nanos));
}

Money false_positive_overhead(const ConfusionCounts& counts, Money cost_per_false_alarm,
                              Decimal window_years) {
  if (window_years.nanos() <= 0) {
    throw Error(Errc::InvalidArgument, "window_years must be positive");
  }
  if (counts.fp < 0) throw Error(Errc::InvalidArgument, "fp must be nonnegative");
  __int128 num = checked_mul(checked_mul(counts.fp, cost_per_false_alarm.cents()), Decimal::kOne);
  return Money(round_half_even(num, window_years.nanos()), cost_per_false_alarm.currency());
}

namespace {

void check_spend(const InvestmentCurve& curve, Money spend) {
  if (spend.currency() != curve.kappa().currency()) {
    throw Error(Errc::CurrencyMismatch, "spend and curve use different currencies");
  }
  if (spend.cents() < 0) throw Error(Errc::DomainViolation, "spend must be nonnegative");
}

}  // namespace

Alleviation omega_from_investment(const InvestmentCurve& curve, Money spend) {
  check_spend(curve, spend);
  const double x = static_cast<double>(spend.cents()) / static_cast<double>(curve.kappa().cents());
  const std::int64_t cap = curve.omega_max().omega().nanos();
  const double omega = static_cast<double>(cap) * -std::expm1(-x);
  auto nanos = static_cast<std::int64_t>(std::nearbyint(omega));
  nanos = std::clamp<std::int64_t>(nanos, 0, cap);
  return *Alleviation::make(Decimal::from_nanos(nanos));
}

Money required_investment(const InvestmentCurve& curve, Alleviation target) {
  const auto cap = curve.omega_max().omega();
  if (target.omega() >= cap) {
    throw Error(Errc::Unreachable, "target " + target.omega().to_string() +
                                       " is not below the curve asymptote " + cap.to_string());
  }
  const Currency currency = curve.kappa().currency();
  if (target.omega().nanos() == 0) return Money::zero(currency);

  const long double ratio = static_cast<long double>(target.omega().nanos()) / cap.nanos();
  const long double x = -std::log1p(-ratio);
  const auto estimate = std::max<std::int64_t>(static_cast<std::int64_t>(std::ceil(x * curve.kappa().cents())), 1);

  // The closed form only brackets the answer: omega is rounded to nanos, so
  // several cents can share one omega. Bisect for the least sufficient cent.
  auto reaches = [&](std::int64_t c) { return omega_from_investment(curve, Money(c, currency)) >= target; };
  std::int64_t hi = estimate, step = 1;
  while (!reaches(hi)) {
    hi = estimate + step;
    step *= 2;
  }
  std::int64_t lo = hi - 1;
  step = 1;
  while (lo > 0 && reaches(lo)) {
    lo = std::max<std::int64_t>(hi - 2 * step, 0);
    step *= 2;
  }
  // reaches(lo) is false (lo == 0 reaches nothing since target > 0), reaches(hi) is true.
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (reaches(mid) ? hi : lo) = mid;
  }
  return Money(hi, currency);
}

}  // namespace painworth
