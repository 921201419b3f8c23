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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qtors/exactmath/factor.hpp"
#include "qtors/exactmath/poly.hpp"
#include "qtors/exactmath/rational.hpp"

namespace qtors {
namespace {

RatPoly P(const char* s) { return parse_ratpoly(s); }

// Sylvester-matrix determinant by fraction-exact Gaussian elimination.
Rational sylvester_resultant(const RatPoly& f, const RatPoly& g) {
    const std::size_t m = f.deg(), n = g.deg(), N = m + n;
    std::vector<std::vector<Rational>> S(N, std::vector<Rational>(N, Rational(0)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) S[r][r + i] = f[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) S[n + r][r + i] = g[n - i];
    Rational det = 1;
    for (std::size_t c = 0; c < N; ++c) {
        std::size_t piv = c;
        while (piv < N && S[piv][c] == 0) ++piv;
        if (piv == N) return Rational(0);
        if (piv != c) {
            std::swap(S[piv], S[c]);
            det = -det;
        }
        det *= S[c][c];
        for (std::size_t r = c + 1; r < N; ++r) {
            Rational k = S[r][c] / S[c][c];
            for (std::size_t j = c; j < N; ++j) S[r][j] -= k * S[c][j];
        }
    }
    return det;
}

// Rational root theorem by exhaustive divisor search; only for tiny coefficients.
std::vector<Rational> brute_roots(const RatPoly& h) {
    auto z = primitive_integer_part(h);
    std::set<Rational> roots;
    std::size_t lo = 0;
    while (z[lo] == 0) ++lo;
    if (lo > 0) roots.insert(Rational(0));
    Integer a0 = abs(z[lo]), an = abs(z.back());
    for (Integer p = 1; p <= a0; ++p) {
        if (a0 % p != 0) continue;
        for (Integer q = 1; q <= an; ++q) {
            if (an % q != 0) continue;
            for (int s : {1, -1}) {
                Rational r(s * p, q);
                r.canonicalize();
                if (h(r) == 0) roots.insert(r);
            }
        }
    }
    return {roots.begin(), roots.end()};
}

TEST(Rational, ParseAndFormat) {
    EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_EQ(to_string(parse_rational("10/2")), "5");
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("1.5"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, SquarefreePart) {
    EXPECT_EQ(squarefree_part(Integer(-72)), Integer(-2));
    EXPECT_EQ(squarefree_part(Rational(5, 4)), Integer(5));
    EXPECT_EQ(squarefree_part(Rational(3, 8)), Integer(6));
    EXPECT_TRUE(is_rational_square(Rational(49, 16)));
    EXPECT_FALSE(is_rational_square(Rational(-1)));
}

TEST(Rational, FactorIntegerRecomposes) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Integer n = Integer(static_cast<unsigned long>(rng() % 1000000007)) * Integer(static_cast<unsigned long>(rng() % 1000003 + 2));
        Integer prod = 1;
        for (auto& [p, e] : factor_integer(n)) {
            EXPECT_TRUE(mpz_probab_prime_p(p.get_mpz_t(), 30) > 0);
            prod *= pow(p, e);
        }
        EXPECT_EQ(prod, n);
    }
}

TEST(Poly, Arithmetic) {
    RatPoly a = P("1,1"), b = P("-1,1");
    EXPECT_EQ(a * b, P("-1,0,1"));
    auto [q, r] = divmod(P("1,0,0,1"), a);
    EXPECT_EQ(q, P("1,-1,1"));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(P("3,0,1").derivative(), P("0,2"));
    EXPECT_EQ(P("0,0,1").taylor_shift(Rational(1)), P("1,2,1"));
}

TEST(Factor, GcdMatchesConstruction) {
    RatPoly g = P("2,-3,1");        // (x-1)(x-2)
    RatPoly a = g * P("5,0,0,7");   // times 7x^3+5
    RatPoly b = g * P("-1,3,1");
    EXPECT_EQ(poly_gcd(a, b), g);
    EXPECT_EQ(poly_gcd(P("1,1"), P("1,-1")), P("1"));
    EXPECT_EQ(poly_gcd(RatPoly{}, P("2,4")), P("1/2,1"));
}

TEST(Factor, ResultantAgreesWithSylvester) {
    std::mt19937_64 rng(11);
    auto rnd = [&](std::size_t d) {
        std::vector<Rational> c(d + 1);
        for (auto& v : c) v = Rational(static_cast<long>(rng() % 21) - 10);
        if (c.back() == 0) c.back() = 1;
        return RatPoly(c);
    };
    for (int i = 0; i < 40; ++i) {
        RatPoly f = rnd(1 + rng() % 5), g = rnd(1 + rng() % 5);
        EXPECT_EQ(resultant(f, g), sylvester_resultant(f, g));
    }
}

TEST(Factor, DiscriminantIsProductOfRootDifferences) {
    const std::vector<long> roots{1, 2, 4, -3};
    RatPoly f = RatPoly::constant(Rational(1));
    Rational expected = 1;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        f *= RatPoly{Rational(-roots[i]), Rational(1)};
        for (std::size_t j = i + 1; j < roots.size(); ++j) expected *= Rational((roots[i] - roots[j]) * (roots[i] - roots[j]));
    }
    EXPECT_EQ(discriminant(f), expected);
    EXPECT_EQ(discriminant(P("1,0,1")), Rational(-4));
}

TEST(Factor, FactorBoundedRecomposesFullFactorization) {
    // (x-1)^2 (x+2) (x^2+1) (x^4 - 10x^2 + 1) (3x-5)
    RatPoly h = P("-1,1") * P("-1,1") * P("2,1") * P("1,0,1") * P("1,0,-10,0,1") * P("-5,3");
    auto fs = factor_bounded(h, 4);
    RatPoly prod = RatPoly::constant(Rational(1));
    for (const auto& f : fs) prod *= pow(f.poly, f.multiplicity);
    EXPECT_EQ(prod, h.monic());
    EXPECT_EQ(fs.size(), 5u);
}

TEST(Factor, FactorBoundedSkipsLargeFactors) {
    // x^5 - x - 1 is irreducible of degree 5.
    RatPoly h = P("-1,-1,0,0,0,1") * P("-2,0,1");
    auto fs = factor_bounded(h, 4);
    ASSERT_EQ(fs.size(), 1u);
    EXPECT_EQ(fs[0].poly, P("-2,0,1"));
    EXPECT_TRUE(factor_bounded(P("-1,-1,0,0,0,1"), 4).empty());
}

TEST(Factor, SwinnertonDyerIsIrreducible) {
    // x^4 - 10x^2 + 1 splits into linear or quadratic factors modulo every prime.
    EXPECT_TRUE(factor_bounded(P("1,0,-10,0,1"), 3).empty());
    auto fs = factor_bounded(P("1,0,-10,0,1"), 4);
    ASSERT_EQ(fs.size(), 1u);
}

TEST(Factor, QuadraticPairsOfLargeQuartic) {
    RatPoly a = P("123456789,-987,1"), b = P("-55555,31,1");
    auto fs = factor_bounded(a * b * P("7,0,0,0,0,0,1"), 2);
    ASSERT_EQ(fs.size(), 2u);
    EXPECT_EQ(fs[0].poly * fs[1].poly, a * b);
}

TEST(Factor, RationalRootsMatchExhaustiveSearch) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        RatPoly h = RatPoly::constant(Rational(static_cast<long>(rng() % 5 + 1)));
        std::size_t k = 1 + rng() % 4;
        for (std::size_t j = 0; j < k; ++j) {
            long p = static_cast<long>(rng() % 13) - 6, q = static_cast<long>(rng() % 4) + 1;
            h *= RatPoly{Rational(-p), Rational(q)};
        }
        h *= P("1,1,1");
        EXPECT_EQ(rational_roots(h), brute_roots(h)) << h;
    }
}

TEST(Factor, SquarefreePartDropsRepeats) {
    EXPECT_EQ(squarefree_part(P("1,-2,1") * P("3,1")), P("-1,1") * P("3,1"));
}

}  // namespace
}  // namespace qtors
