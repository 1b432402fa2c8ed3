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

#include "stalecsi/rational.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace stalecsi {

Rational harmonic(std::size_t K) {
    Rational h = 0;
    for (std::size_t k = 1; k <= K; ++k)
        h += Rational(1, static_cast<long long>(k));
    return h;
}

std::string to_fraction_string(const Rational& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

double to_double(const Rational& x) {
    return x.convert_to<double>();
}

std::string to_decimal_string(const Rational& x, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, to_double(x));
    return buf;
}

BigInt floor(const Rational& x) {
    const BigInt n = numerator(x);
    const BigInt d = denominator(x); // always positive
    BigInt q = n / d;                // truncates toward zero
    if (n < 0 && q * d != n)
        q -= 1;
    return q;
}

BigInt ceil(const Rational& x) {
    return -floor(-x);
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x))
        throw std::invalid_argument("rational_from_double: non-finite value");
    int exponent = 0;
    const double mantissa = std::frexp(x, &exponent); // x = mantissa * 2^exponent
    const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    Rational r(scaled);
    const int shift = exponent - 53;
    if (shift >= 0)
        r *= Rational(BigInt(1) << shift);
    else
        r /= Rational(BigInt(1) << -shift);
    return r;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&]() { return std::invalid_argument("not a rational number: '" + s + "'"); };
    if (s.empty())
        throw bad();

    if (const auto slash = s.find('/'); slash != std::string::npos) {
        try {
            const BigInt p(s.substr(0, slash));
            const BigInt q(s.substr(slash + 1));
            if (q == 0)
                throw std::invalid_argument("zero denominator in '" + s + "'");
            return Rational(p, q);
        } catch (const std::runtime_error&) {
            throw bad();
        }
    }

    // Decimal with optional exponent: [sign] digits [. digits] [e [sign] digits]
    std::size_t i = 0;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-')
        negative = s[i++] == '-';
    BigInt digits = 0;
    long long frac_len = 0;
    bool any = false;
    bool in_frac = false;
    for (; i < s.size(); ++i) {
        const char ch = s[i];
        if (ch >= '0' && ch <= '9') {
            digits = digits * 10 + (ch - '0');
            any = true;
            if (in_frac)
                ++frac_len;
        } else if (ch == '.' && !in_frac) {
            in_frac = true;
        } else {
            break;
        }
    }
    if (!any)
        throw bad();
    long long exp10 = 0;
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E')
            throw bad();
        ++i;
        std::size_t used = 0;
        try {
            exp10 = std::stoll(s.substr(i), &used);
        } catch (const std::exception&) {
            throw bad();
        }
        if (i + used != s.size() || std::llabs(exp10) > 4000)
            throw bad();
    }
    exp10 -= frac_len;
    Rational r(digits);
    const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::llabs(exp10)));
    if (exp10 >= 0)
        r *= Rational(scale);
    else
        r /= Rational(scale);
    return negative ? Rational(-r) : r;
}

} // namespace stalecsi
