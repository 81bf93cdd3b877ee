// Copyright 2026 The rcint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rcint/scalar.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <system_error>

#include "rcint/error.hpp"

namespace rcint {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt pow10(int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

Rational parse_decimal(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt digits = 0;
  int frac_digits = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      any_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) {
    throw Error(ErrorCode::Parse, "not a number: '" + std::string(whole) + "'");
  }
  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    const auto rest = text.substr(pos);
    const char* first = rest.data();
    if (!rest.empty() && rest.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, rest.data() + rest.size(), exponent);
    if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
      throw Error(ErrorCode::Parse, "bad exponent in '" + std::string(whole) + "'");
    }
    pos = text.size();
  }
  if (pos != text.size()) {
    throw Error(ErrorCode::Parse, "trailing characters in '" + std::string(whole) + "'");
  }
  if (exponent > 400 || exponent < -400) {
    throw Error(ErrorCode::Parse, "exponent out of range in '" + std::string(whole) + "'");
  }
  const long scale = exponent - frac_digits;
  Rational r = scale >= 0 ? Rational(digits * pow10(static_cast<int>(scale)))
                          : Rational(digits) / Rational(pow10(static_cast<int>(-scale)));
  return negative ? Rational(-r) : r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_decimal(trim(s.substr(0, slash)), text);
    const Rational den = parse_decimal(trim(s.substr(slash + 1)), text);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(s, text);
}

double parse_double(std::string_view text) {
  const auto s = trim(text);
  if (s.find('/') != std::string_view::npos) return to_double(parse_rational(s));
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::Parse, "not a number: '" + std::string(text) + "'");
  }
  return v;
}

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::InvalidArgument, "non-finite value has no rational form");
  }
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw Error(ErrorCode::InvalidArgument, "cannot format double");
  return parse_decimal(std::string_view(buf.data(), static_cast<std::size_t>(ptr - buf.data())),
                       std::string_view(buf.data(), static_cast<std::size_t>(ptr - buf.data())));
}

std::string format_scalar(double v) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", v);
  return buf.data();
}

std::string format_scalar(const Rational& v) {
  const auto num = boost::multiprecision::numerator(v);
  const auto den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace rcint
