// SPDX-License-Identifier: Apache-2.0
//
// stalecsi: net degrees of freedom of the MISO broadcast channel with delayed limited feedback
// Copyright (C) 2026 The stalecsi authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace stalecsi {

// Exact rational with arbitrary-precision numerator and denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// H_K = 1 + 1/2 + ... + 1/K. H_0 = 0.
Rational harmonic(std::size_t K);

// "p/q" in lowest terms; integers render as "p/1" so the column type is uniform.
std::string to_fraction_string(const Rational& x);

// Decimal rendering with `significant` significant digits.
std::string to_decimal_string(const Rational& x, int significant = 12);

double to_double(const Rational& x);

// Parses "p/q", an integer, or a finite decimal ("0.25", "1e-3") exactly.
Rational parse_rational(std::string_view text);

// Exact conversion of a binary double.
Rational rational_from_double(double x);

BigInt floor(const Rational& x);
BigInt ceil(const Rational& x);

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

} // namespace stalecsi
