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

#ifndef QTORS_EXACTMATH_RATIONAL_HPP
#define QTORS_EXACTMATH_RATIONAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtors/error.hpp"

namespace qtors {

// GMP keeps mpq_class canonical (lowest terms, positive denominator, zero is 0/1)
// as long as every value is built through its arithmetic or canonicalize().
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

/// Parses "p/q" or "p" with an optional leading minus; no whitespace, q > 0.
inline Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw ParseError("malformed rational: '" + std::string(text) + "'");
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    Rational r(negative ? Integer(-n) : n, d);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(10); }
inline std::string to_string(const Integer& z) { return z.get_str(10); }

inline Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

/// The non-negative square root of r when r is the square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    if (!is_square(r.get_num()) || !is_square(r.get_den())) return std::nullopt;
    Rational s(isqrt(r.get_num()), isqrt(r.get_den()));
    s.canonicalize();
    return s;
}

inline bool is_rational_square(const Rational& r) { return rational_sqrt(r).has_value(); }

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow(const Rational& base, unsigned long e) {
    Rational r(pow(base.get_num(), e), pow(base.get_den(), e));
    return r;
}

namespace detail {

inline bool probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0 when the
// iteration budget runs out.
inline Integer pollard_brent(const Integer& n, unsigned long seed, std::uint64_t budget) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    Integer y = seed % n, c = (seed * 7 + 1) % n, g = 1, r = 1, q = 1, x, ys;
    const std::uint64_t m = 128;
    std::uint64_t spent = 0;
    auto f = [&](const Integer& v) {
        Integer t = v * v + c;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        return t;
    };
    while (g == 1) {
        x = y;
        for (Integer i = 0; i < r; ++i) y = f(y);
        Integer k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (Integer i = 0; i < m && i < r - k; ++i) {
                y = f(y);
                Integer d = x - y;
                q = q * abs(d) % n;
            }
            g = gcd(q, n);
            k += m;
            spent += m;
            if (spent > budget) return 0;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(abs(Integer(x - ys)), n);
        } while (g == 1);
    }
    return g == n ? Integer(0) : g;
}

inline void factor_into(const Integer& n, std::vector<Integer>& primes, std::uint64_t budget) {
    if (n == 1) return;
    if (probable_prime(n)) {
        primes.push_back(n);
        return;
    }
    if (is_square(n)) {
        Integer s = isqrt(n);
        factor_into(s, primes, budget);
        factor_into(s, primes, budget);
        return;
    }
    for (unsigned long seed = 2; seed < 12; ++seed) {
        Integer d = pollard_brent(n, seed, budget);
        if (d != 0 && d != 1 && d != n) {
            factor_into(d, primes, budget);
            factor_into(Integer(n / d), primes, budget);
            return;
        }
    }
    // Unfactored composite cofactor: kept as a single "prime". Callers that
    // need certified squarefree parts only see this for numbers far beyond
    // the sizes that occur in practice here.
    primes.push_back(n);
}

}  // namespace detail

/// Factorization of |n| into (prime, exponent) pairs, ascending. n must be nonzero.
inline std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n,
                                                                  std::uint64_t rho_budget = 20'000'000) {
    if (n == 0) throw DomainError("factor_integer: zero");
    Integer m = abs(n);
    std::vector<Integer> primes;
    for (unsigned long p = 2; p < 10000 && Integer(p) * p <= m; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            primes.emplace_back(p);
            m /= p;
        }
    }
    if (m != 1) detail::factor_into(m, primes, rho_budget);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Integer, unsigned>> out;
    for (const Integer& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1u);
    }
    return out;
}

/// Squarefree kernel of a nonzero integer, sign kept: 12 -> 3, -8 -> -2.
inline Integer squarefree_part(const Integer& n) {
    Integer out = 1;
    for (const auto& [p, e] : factor_integer(n))
        if (e % 2 == 1) out *= p;
    return sgn(n) < 0 ? Integer(-out) : out;
}

/// Squarefree integer m with r = m * (rational square). r nonzero.
inline Integer squarefree_part(const Rational& r) {
    if (sgn(r) == 0) throw DomainError("squarefree_part: zero");
    return squarefree_part(Integer(r.get_num() * r.get_den()));
}

inline bool is_squarefree(const Integer& n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factor_integer(n))
        if (e > 1) return false;
    return true;
}

}  // namespace qtors

#endif  // QTORS_EXACTMATH_RATIONAL_HPP
