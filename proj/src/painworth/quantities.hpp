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

#include <optional>

#include "painworth/money.hpp"

namespace painworth {

/// Expected occurrences per year. Never negative.
class Rate {
 public:
  constexpr Rate() = default;
  static std::optional<Rate> make(Decimal per_year) {
    if (per_year < Decimal{}) return std::nullopt;
    Rate r;
    r.per_year_ = per_year;
    return r;
  }

  Decimal per_year() const { return per_year_; }
  constexpr auto operator<=>(const Rate&) const = default;

 private:
  Decimal per_year_;
};

/// Fraction of a pain's occurrences the service actually resolves, in [0, 1].
class Alleviation {
 public:
  constexpr Alleviation() = default;
  static std::optional<Alleviation> make(Decimal omega) {
    if (omega < Decimal{} || omega > Decimal::from_nanos(Decimal::kOne)) return std::nullopt;
    Alleviation a;
    a.omega_ = omega;
    return a;
  }
  static Alleviation full() { return *make(Decimal::from_nanos(Decimal::kOne)); }

  Decimal omega() const { return omega_; }
  bool is_full() const { return omega_.nanos() == Decimal::kOne; }
  constexpr auto operator<=>(const Alleviation&) const = default;

 private:
  Decimal omega_;
};

/// Provider's share of the price ceiling charged as fee, in [0, 1].
class PricingPolicy {
 public:
  PricingPolicy() : revenue_share_(Decimal::from_nanos(Decimal::kOne / 2)) {}
  static std::optional<PricingPolicy> make(Decimal revenue_share) {
    if (revenue_share < Decimal{} || revenue_share > Decimal::from_nanos(Decimal::kOne)) {
      return std::nullopt;
    }
    PricingPolicy p;
    p.revenue_share_ = revenue_share;
    return p;
  }

  Decimal revenue_share() const { return revenue_share_; }
  bool operator==(const PricingPolicy&) const = default;

 private:
  Decimal revenue_share_;
};

}  // namespace painworth
