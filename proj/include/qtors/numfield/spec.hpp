/*
   Copyright 2026 The quartic-torsion Authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QTORS_NUMFIELD_SPEC_HPP
#define QTORS_NUMFIELD_SPEC_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qtors/error.hpp"
#include "qtors/exactmath/poly.hpp"
#include "qtors/exactmath/rational.hpp"
#include "qtors/numfield/classify.hpp"
#include "qtors/numfield/field.hpp"

namespace qtors {

/// Monic integral polynomial defining the same field as g: with g monic and D the lcm
/// of its denominators (after making g monic), returns D^n·g(y/D).
inline RatPoly monic_integral_normalization(const RatPoly& g) {
    if (g.is_zero() || g.is_constant()) throw DomainError("cannot normalize a constant polynomial");
    RatPoly h = g.monic();
    Integer D = 1;
    for (std::size_t i = 0; i < h.size(); ++i) D = lcm(D, Integer(h[i].get_den()));
    const std::size_t n = h.deg();
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = h[i] * Rational(pow(D, static_cast<unsigned long>(n - i)));
    return RatPoly(std::move(c));
}

/// ℚ(√m, √n) generated by √m + √n: x⁴ − 2(m+n)x² + (m−n)².
inline NumberField biquadratic_field(const Rational& m, const Rational& n) {
    if (is_rational_square(m) || is_rational_square(n) || is_rational_square(Rational(m * n)))
        throw DomainError("m, n and mn must all be non-squares");
    Rational d = m - n;
    return NumberField(RatPoly{Rational(d * d), Rational(0), Rational(-2 * (m + n)), Rational(0), Rational(1)});
}

/// ℚ(√m).
inline NumberField quadratic_field(const Rational& m) {
    if (is_rational_square(m)) throw DomainError("m must not be a rational square");
    return NumberField(monic_integral_normalization(RatPoly{Rational(-m), Rational(0), Rational(1)}));
}

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline std::string trim(std::string_view s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string_view::npos) return {};
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(a, b - a + 1));
}

}  // namespace detail

/// Parses a field description.
///
///   Q                 the rationals
///   m                 ℚ(√m)
///   m,n               ℚ(√m, √n)
///   c0,c1,c2,c3       x⁴ + c3x³ + c2x² + c1x + c0
///   c0,...,cd         full coefficient list (3 or 5 entries), normalized to monic integral
///   m;a;b             ℚ(√(a + b√m))
inline NumberField parse_field_spec(std::string_view text) {
    const std::string s = detail::trim(text);
    if (s.empty()) throw ParseError("empty field spec");
    if (s == "Q" || s == "QQ") return NumberField::rationals();
    if (s.find(';') != std::string::npos) {
        auto parts = detail::split(s, ';');
        if (parts.size() != 3) throw ParseError("tower spec must be m;a;b");
        return cyclic_criterion(parse_rational(detail::trim(parts[0])), parse_rational(detail::trim(parts[1])),
                                parse_rational(detail::trim(parts[2])))
            .second;
    }
    std::vector<Rational> v;
    for (const std::string& p : detail::split(s, ',')) v.push_back(parse_rational(detail::trim(p)));
    switch (v.size()) {
        case 1: return quadratic_field(v[0]);
        case 2: return biquadratic_field(v[0], v[1]);
        case 4: {
            for (const Rational& c : v)
                if (c.get_den() != 1) throw ParseError("monic quartic spec needs integer coefficients");
            v.push_back(Rational(1));
            return NumberField(RatPoly(std::move(v)));
        }
        case 3:
        case 5: return NumberField(monic_integral_normalization(RatPoly(std::move(v))));
        default: throw ParseError("field spec has " + std::to_string(v.size()) + " entries");
    }
}

}  // namespace qtors

#endif  // QTORS_NUMFIELD_SPEC_HPP
