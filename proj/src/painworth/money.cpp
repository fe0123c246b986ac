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

#include "painworth/money.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "painworth/error.hpp"

namespace painworth {

namespace {

constexpr __int128 kInt64Max = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kInt64Min = std::numeric_limits<std::int64_t>::min();

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::int64_t narrow(__int128 value) {
  if (value > kInt64Max || value < kInt64Min) {
    throw Error(Errc::Overflow, "amount exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(value);
}

// Parses [sign] digits [. digits] into an integer scaled by 10^scale.
// Fractional digits beyond `scale` are rounded half-even when `round_excess`,
// otherwise rejected.
std::optional<std::int64_t> parse_scaled(std::string_view text, int scale,
                                         bool round_excess) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  __int128 value = 0;
  int int_digits = 0;
  while (pos < text.size() && is_digit(text[pos])) {
    value = value * 10 + (text[pos] - '0');
    if (value > kInt64Max * 10) return std::nullopt;
    ++int_digits;
    ++pos;
  }
  int frac_digits = 0;
  int first_excess = -1;
  bool sticky = false;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && is_digit(text[pos])) {
      int digit = text[pos] - '0';
      if (frac_digits < scale) {
        value = value * 10 + digit;
        ++frac_digits;
      } else if (first_excess < 0) {
        first_excess = digit;
      } else if (digit != 0) {
        sticky = true;
      }
      ++pos;
    }
    if (frac_digits == 0 && first_excess < 0) return std::nullopt;
  }
  if (pos != text.size() || (int_digits == 0 && frac_digits == 0)) {
    return std::nullopt;
  }
  if (first_excess >= 0) {
    if (!round_excess) return std::nullopt;
    bool up = first_excess > 5 || (first_excess == 5 && (sticky || value % 2 != 0));
    if (up) value += 1;
  }
  for (int i = frac_digits; i < scale; ++i) {
    value *= 10;
    if (value > kInt64Max + 1) return std::nullopt;
  }
  if (negative) value = -value;
  if (value > kInt64Max || value < kInt64Min) return std::nullopt;
  return static_cast<std::int64_t>(value);
}

std::string format_scaled(std::int64_t scaled, int scale, bool trim) {
  __int128 v = scaled;
  bool negative = v < 0;
  if (negative) v = -v;
  __int128 unit = 1;
  for (int i = 0; i < scale; ++i) unit *= 10;
  auto whole = static_cast<unsigned long long>(v / unit);
  auto frac = static_cast<unsigned long long>(v % unit);
  std::string out = negative ? "-" : "";
  out += std::to_string(whole);
  if (scale > 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, static_cast<std::size_t>(scale) - digits.size(), '0');
    if (trim) {
      while (!digits.empty() && digits.back() == '0') digits.pop_back();
    }
    if (!digits.empty()) out += "." + digits;
  }
  return out;
}

}  // namespace

std::int64_t round_half_even(__int128 num, __int128 den) {
  if (den <= 0) throw Error(Errc::InvalidArgument, "rounding denominator must be positive");
  __int128 q = num / den;
  __int128 r = num % den;
  if (r != 0) {
    // C++ division truncates toward zero; normalise to floor.
    if (r < 0) {
      q -= 1;
      r += den;
    }
    __int128 twice = 2 * r;
    if (twice > den || (twice == den && q % 2 != 0)) q += 1;
  }
  return narrow(q);
}

__int128 checked_mul(__int128 a, __int128 b) {
  __int128 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(Errc::Overflow, "intermediate product exceeds 128-bit range");
  }
  return out;
}

// Decimal ---------------------------------------------------------------

Decimal Decimal::from_integer(std::int64_t value) {
  return from_nanos(narrow(static_cast<__int128>(value) * kOne));
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
  auto scaled = parse_scaled(text, kDigits, true);
  if (!scaled) return std::nullopt;
  return from_nanos(*scaled);
}

Decimal Decimal::from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(Errc::DomainViolation, "non-finite number");
  }
  char buf[1100];
  auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed);
  if (res.ec != std::errc()) throw Error(Errc::Overflow, "number too large");
  auto parsed = parse(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
  if (!parsed) throw Error(Errc::Overflow, "number out of decimal range");
  return *parsed;
}

std::string Decimal::to_string() const { return format_scaled(nanos_, kDigits, true); }

// Currency --------------------------------------------------------------

std::optional<Currency> Currency::parse(std::string_view code) {
  if (code.size() != 3) return std::nullopt;
  Currency c;
  for (std::size_t i = 0; i < 3; ++i) {
    if (code[i] < 'A' || code[i] > 'Z') return std::nullopt;
    c.code_[i] = code[i];
  }
  return c;
}

// Money -----------------------------------------------------------------

std::optional<Money> Money::parse(std::string_view text, Currency currency) {
  auto cents = parse_scaled(text, 2, false);
  if (!cents) return std::nullopt;
  return Money(*cents, currency);
}

Money Money::from_decimal(Decimal major_units, Currency currency) {
  return Money(round_half_even(major_units.nanos(), Decimal::kOne / 100), currency);
}

Decimal Money::to_decimal() const {
  return Decimal::from_nanos(narrow(static_cast<__int128>(cents_) * (Decimal::kOne / 100)));
}

std::string Money::to_string() const { return format_scaled(cents_, 2, false); }

std::string Money::to_grouped() const { return group_thousands(to_string()); }

std::string Money::to_grouped_compact() const {
  if (cents_ % 100 == 0) return group_thousands(format_scaled(cents_ / 100, 0, false));
  return to_grouped();
}

void Money::require_same_currency(const Money& other) const {
  if (currency_ != other.currency_) {
    throw Error(Errc::CurrencyMismatch, "cannot combine " + currency_.to_string() +
                                            " with " + other.currency_.to_string());
  }
}

Money Money::operator+(const Money& other) const {
  require_same_currency(other);
  return Money(narrow(static_cast<__int128>(cents_) + other.cents_), currency_);
}

Money Money::operator-(const Money& other) const {
  require_same_currency(other);
  return Money(narrow(static_cast<__int128>(cents_) - other.cents_), currency_);
}

Money Money::operator-() const { return Money(narrow(-static_cast<__int128>(cents_)), currency_); }

Money& Money::operator+=(const Money& other) { return *this = *this + other; }

Money& Money::operator-=(const Money& other) { return *this = *this - other; }

std::strong_ordering Money::operator<=>(const Money& other) const {
  require_same_currency(other);
  return cents_ <=> other.cents_;
}

std::string group_thousands(std::string_view plain) {
  std::size_t start = (!plain.empty() && plain[0] == '-') ? 1 : 0;
  std::size_t end = plain.find('.');
  if (end == std::string_view::npos) end = plain.size();
  std::string out(plain.substr(0, start));
  std::size_t digits = end - start;
  for (std::size_t i = 0; i < digits; ++i) {
    if (i > 0 && (digits - i) % 3 == 0) out += '\'';
    out += plain[start + i];
  }
  out += plain.substr(end);
  return out;
}

}  // namespace painworth
