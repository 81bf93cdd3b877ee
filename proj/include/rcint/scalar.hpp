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

#pragma once

// Numeric modes. Every algorithm in the library is a template over one of
// two scalar types: `double` (float mode) or `Rational` (exact mode).

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rcint {

using Rational = boost::multiprecision::number<
    boost::multiprecision::cpp_rational_backend,
    boost::multiprecision::et_off>;

template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <Scalar T>
inline constexpr bool kIsExact = std::same_as<T, Rational>;

/// Absolute tolerance used by float-mode equality checks.
inline constexpr double kDefaultTolerance = 1e-9;

template <Scalar T>
bool nearly_equal(const T& a, const T& b, double tol = kDefaultTolerance) {
  if constexpr (kIsExact<T>) {
    return a == b;
  } else {
    return std::abs(a - b) <= tol;
  }
}

/// a >= b, allowing `tol` of slack in float mode.
template <Scalar T>
bool at_least(const T& a, const T& b, double tol = kDefaultTolerance) {
  if constexpr (kIsExact<T>) {
    return a >= b;
  } else {
    return a >= b - tol;
  }
}

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

/// Parses "p/q", integers and decimals (with optional exponent) exactly.
Rational parse_rational(std::string_view text);

/// Parses decimals directly and "p/q" through the exact path.
double parse_double(std::string_view text);

template <Scalar T>
T parse_scalar(std::string_view text) {
  if constexpr (kIsExact<T>) {
    return parse_rational(text);
  } else {
    return parse_double(text);
  }
}

/// Exact rational equal to the shortest decimal that round-trips `v`, so
/// that a value written as 0.9 in an input file becomes 9/10.
Rational rational_from_double(double v);

template <Scalar T>
T scalar_from_double(double v) {
  if constexpr (kIsExact<T>) {
    return rational_from_double(v);
  } else {
    return v;
  }
}

template <Scalar T>
T scalar_from_ratio(long long num, long long den = 1) {
  if constexpr (kIsExact<T>) {
    return Rational(num) / Rational(den);
  } else {
    return static_cast<double>(num) / static_cast<double>(den);
  }
}

/// 12 significant digits.
std::string format_scalar(double v);
/// "p/q", or "p" for integers.
std::string format_scalar(const Rational& v);

}  // namespace rcint
