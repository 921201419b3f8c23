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

#ifndef QTORS_EXACTMATH_MODP_HPP
#define QTORS_EXACTMATH_MODP_HPP

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <random>
#include <utility>
#include <vector>

#include "qtors/error.hpp"
#include "qtors/exactmath/rational.hpp"

namespace qtors::modp {

// Polynomials over F_p for word-size primes p < 2^31, constant term first.
using Poly = std::vector<std::uint64_t>;

struct Field {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        a %= p;
        while (e) {
            if (e & 1u) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const {
        if (a % p == 0) throw DivisionByZero("inverse of zero mod p");
        return pow(a, p - 2);
    }
    std::uint64_t reduce(const Integer& z) const {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
        return r.get_ui();
    }
};

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly reduce(const Field& F, const std::vector<Integer>& z) {
    Poly a(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) a[i] = F.reduce(z[i]);
    trim(a);
    return a;
}

inline Poly add(const Field& F, const Poly& a, const Poly& b) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = F.add(c[i], b[i]);
    trim(c);
    return c;
}

inline Poly sub(const Field& F, const Poly& a, const Poly& b) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = F.sub(c[i], b[i]);
    trim(c);
    return c;
}

inline Poly mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % F.p;
    }
    trim(c);
    return c;
}

inline Poly scale(const Field& F, const Poly& a, std::uint64_t s) {
    Poly c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = F.mul(a[i], s);
    trim(c);
    return c;
}

inline std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
    if (b.empty()) throw DivisionByZero("mod-p polynomial division by zero");
    if (a.size() < b.size()) return {Poly{}, a};
    Poly r = a;
    Poly q(a.size() - b.size() + 1, 0);
    const std::uint64_t inv = F.inv(b.back());
    const std::size_t db = b.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
        std::uint64_t top = r[k + db];
        if (top == 0) continue;
        std::uint64_t f = F.mul(top, inv);
        q[k] = f;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] = F.sub(r[k + j], F.mul(f, b[j]));
    }
    r.resize(db);
    trim(r);
    trim(q);
    return {q, r};
}

inline Poly rem(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

inline Poly monic(const Field& F, const Poly& a) {
    if (a.empty()) return a;
    return scale(F, a, F.inv(a.back()));
}

inline Poly gcd(const Field& F, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

/// Returns (g, s, t) with s a + t b = g monic.
inline std::tuple<Poly, Poly, Poly> ext_gcd(const Field& F, Poly a, Poly b) {
    Poly s0{1}, s1{}, t0{}, t1{1};
    while (!b.empty()) {
        auto [q, r] = divmod(F, a, b);
        Poly s2 = sub(F, s0, mul(F, q, s1));
        Poly t2 = sub(F, t0, mul(F, q, t1));
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.empty()) return {a, s0, t0};
    std::uint64_t inv = F.inv(a.back());
    return {scale(F, a, inv), scale(F, s0, inv), scale(F, t0, inv)};
}

inline Poly derivative(const Field& F, const Poly& a) {
    if (a.size() <= 1) return {};
    Poly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = F.mul(a[i], i % F.p);
    trim(d);
    return d;
}

inline Poly mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m) { return rem(F, mul(F, a, b), m); }

/// base^e mod m, exponent as an arbitrary integer.
inline Poly powmod(const Field& F, Poly base, const Integer& e, const Poly& m) {
    Poly r{1};
    r = rem(F, r, m);
    base = rem(F, base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mulmod(F, r, r, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(F, r, base, m);
    }
    return r;
}

inline bool is_squarefree(const Field& F, const Poly& a) {
    Poly d = derivative(F, a);
    if (d.empty()) return a.size() <= 1;
    return gcd(F, a, d).size() == 1;
}

struct DistinctDegree {
    std::vector<std::pair<unsigned, Poly>> parts;  // (d, product of all degree-d irreducible factors)
    Poly rest;                                      // product of the factors of degree > dmax
};

/// Distinct-degree split of a monic squarefree f, resolved only up to dmax.
inline DistinctDegree distinct_degree(const Field& F, Poly f, unsigned dmax) {
    DistinctDegree out;
    Poly x{0, 1};
    Poly h = rem(F, x, f);
    for (unsigned d = 1; d <= dmax && f.size() > 2 * d; ++d) {
        h = powmod(F, h, Integer(static_cast<unsigned long>(F.p)), f);
        Poly g = gcd(F, f, sub(F, h, rem(F, x, f)));
        if (g.size() > 1) {
            out.parts.emplace_back(d, g);
            f = divmod(F, f, g).first;
            h = rem(F, h, f);
        }
    }
    // What is left has no factor of degree < d0 where 2*d0 > deg f; if deg f <= dmax it is irreducible.
    if (f.size() > 1) {
        unsigned df = static_cast<unsigned>(f.size() - 1);
        if (df <= dmax) {
            bool merged = false;
            for (auto& [d, g] : out.parts)
                if (d == df) {
                    g = mul(F, g, f);
                    merged = true;
                }
            if (!merged) out.parts.emplace_back(df, f);
            f = Poly{1};
        }
    }
    out.rest = f.empty() ? Poly{1} : f;
    return out;
}

/// Cantor–Zassenhaus equal-degree split of a monic product of degree-d irreducibles (p odd).
inline std::vector<Poly> equal_degree(const Field& F, const Poly& g, unsigned d, std::mt19937_64& rng) {
    const std::size_t n = g.size() - 1;
    if (n == d) return {g};
    Integer exponent = (pow(Integer(static_cast<unsigned long>(F.p)), d) - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> coin(0, F.p - 1);
    while (true) {
        Poly a(n);
        for (auto& v : a) v = coin(rng);
        trim(a);
        if (a.size() <= 1) continue;
        Poly b = powmod(F, a, exponent, g);
        Poly c = gcd(F, g, sub(F, b, Poly{1}));
        if (c.size() > 1 && c.size() < g.size()) {
            auto left = equal_degree(F, c, d, rng);
            auto right = equal_degree(F, divmod(F, g, c).first, d, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

struct SmallFactorization {
    std::vector<Poly> small;  // monic irreducible factors of degree <= dmax
    Poly rest;                // monic product of everything else (1 if none)
};

/// Factors of degree <= dmax of a monic squarefree f over F_p, plus the lumped remainder.
inline SmallFactorization small_factors(const Field& F, const Poly& f, unsigned dmax, std::uint64_t seed = 0x9e3779b97f4a7c15ULL) {
    SmallFactorization out;
    std::mt19937_64 rng(seed ^ F.p);
    DistinctDegree dd = distinct_degree(F, f, dmax);
    for (auto& [d, g] : dd.parts) {
        auto pieces = equal_degree(F, g, d, rng);
        out.small.insert(out.small.end(), pieces.begin(), pieces.end());
    }
    out.rest = dd.rest;
    return out;
}

/// Primes p > 1000 in increasing order.
inline std::vector<std::uint64_t> primes_above_1000(std::size_t count, std::uint64_t start = 1000) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = start + 1; out.size() < count; ++n) {
        bool prime = n > 1;
        for (std::uint64_t d = 2; d * d <= n && prime; ++d)
            if (n % d == 0) prime = false;
        if (prime) out.push_back(n);
    }
    return out;
}

}  // namespace qtors::modp

#endif  // QTORS_EXACTMATH_MODP_HPP
