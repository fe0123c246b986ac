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

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace painworth {

/// Rounds num/den to the nearest integer, ties to even. den must be positive.
/// Throws Error(Overflow) if the quotient does not fit in 64 bits.
std::int64_t round_half_even(__int128 num, __int128 den);

/// Checked 128-bit product; throws Error(Overflow).
__int128 checked_mul(__int128 a, __int128 b);

/// Fixed-point decimal with nine fractional digits. Holds frequencies,
/// alleviation factors and shares so that products with money stay exact.
class Decimal {
 public:
  static constexpr int kDigits = 9;
  static constexpr std::int64_t kOne = 1'000'000'000;

  constexpr Decimal() = default;

  static constexpr Decimal from_nanos(std::int64_t nanos) {
    Decimal d;
    d.nanos_ = nanos;
    return d;
  }
  static Decimal from_integer(std::int64_t value);

  /// Dot-decimal text with optional sign: "25", "0.8", "-5", ".5".
  /// Digits beyond the ninth fractional place are rounded half-even.
  /// Rejects exponents, grouping characters, comma decimals and empty input.
  static std::optional<Decimal> parse(std::string_view text);

  /// Shortest round-trip representation of `value`, then parse(). Throws
  /// Error(DomainViolation) for non-finite input, Error(Overflow) if too big.
  static Decimal from_double(double value);

  constexpr std::int64_t nanos() const { return nanos_; }
  double to_double() const { return static_cast<double>(nanos_) / kOne; }

  /// Minimal text form without trailing zeros: "0.8", "25", "-0.000000001".
  std::string to_string() const;

  constexpr auto operator<=>(const Decimal&) const = default;

 private:
  std::int64_t nanos_ = 0;
};

/// ISO-4217 style three-letter upper-case code.
class Currency {
 public:
  constexpr Currency() : code_{'E', 'U', 'R'} {}
  static std::optional<Currency> parse(std::string_view code);

  std::string_view code() const { return {code_.data(), code_.size()}; }
  std::string to_string() const { return std::string(code()); }

  constexpr bool operator==(const Currency&) const = default;

 private:
  std::array<char, 3> code_;
};

/// Signed amount in minor units (cents) of one currency. Arithmetic and
/// ordering across different currencies throw Error(CurrencyMismatch).
class Money {
 public:
  constexpr Money() = default;
  constexpr Money(std::int64_t cents, Currency currency)
      : cents_(cents), currency_(currency) {}

  static Money zero(Currency currency) { return Money(0, currency); }

  /// Dot-decimal major units with at most two fractional digits:
  /// "50", "50.0", "50.00", "-5.5". No grouping, no comma decimals.
  static std::optional<Money> parse(std::string_view text, Currency currency);

  /// Major units rounded half-even to the cent.
  static Money from_decimal(Decimal major_units, Currency currency);

  std::int64_t cents() const { return cents_; }
  Currency currency() const { return currency_; }
  Decimal to_decimal() const;

  /// Plain machine form: "13080.00", "-0.50".
  std::string to_string() const;
  /// Human form with apostrophe thousands grouping: "13'080.00".
  std::string to_grouped() const;
  /// Human form, cents omitted when the amount is whole: "6'520", "12.50".
  std::string to_grouped_compact() const;

  Money operator+(const Money& other) const;
  Money operator-(const Money& other) const;
  Money operator-() const;
  Money& operator+=(const Money& other);
  Money& operator-=(const Money& other);

  bool operator==(const Money&) const = default;
  std::strong_ordering operator<=>(const Money& other) const;

 private:
  void require_same_currency(const Money& other) const;

  std::int64_t cents_ = 0;
  Currency currency_;
};

/// Groups the integer digits of a plain decimal string with apostrophes.
std::string group_thousands(std::string_view plain);

}  // namespace painworth
