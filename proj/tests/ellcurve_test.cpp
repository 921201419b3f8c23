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

#include "qtors/ellcurve/curve.hpp"
#include "qtors/ellcurve/divpoly.hpp"
#include "qtors/ellcurve/group.hpp"
#include "qtors/ellcurve/halving.hpp"
#include "qtors/ellcurve/lutz_nagell.hpp"
#include "qtors/ellcurve/twist.hpp"
#include "qtors/numfield/spec.hpp"

namespace qtors {
namespace {

RatPoly P(const char* s) { return parse_ratpoly(s); }
Curve C(long a1, long a2, long a3, long a4, long a6) { return Curve(a1, a2, a3, a4, a6); }

Point pt(const Curve& E, long x, long y) {
    NumberField Q;
    return Point(E, Q, Q.from_rational(Rational(x)), Q.from_rational(Rational(y)));
}

TEST(Curve, Invariants) {
    Curve E = C(0, 10, 0, 5, 0);
    EXPECT_EQ(E.c4(), Rational(1360));
    EXPECT_EQ(E.discriminant(), Rational(32000));
    EXPECT_EQ(E.j_invariant(), Rational(78608));
    EXPECT_EQ(invariants_of(C(0, 0, 0, 1, 0)), std::make_pair(Rational(-64), Rational(1728)));
    EXPECT_THROW(C(0, 0, 0, 0, 0), SingularCurveError);
    EXPECT_EQ(4 * E.b8(), E.b2() * E.b6() - E.b4() * E.b4());
}

TEST(Curve, ParseSpec) {
    auto s = parse_curve_spec("1,1,1,-3,1,50b1");
    EXPECT_EQ(s.curve, C(1, 1, 1, -3, 1));
    EXPECT_EQ(*s.label, "50b1");
    EXPECT_FALSE(parse_curve_spec("0,0,0,1/2,0").label);
    EXPECT_THROW(parse_curve_spec("1,2,3"), ParseError);
}

TEST(GroupLaw, SmallExamples) {
    Curve E = C(0, 0, 0, 0, 1);
    Point A = pt(E, 2, 3);
    EXPECT_EQ(A + A, pt(E, 0, 1));
    EXPECT_TRUE((pt(E, 0, 1) + pt(E, 0, -1)).is_infinity());
    Point O = Point::infinity(E, NumberField());
    EXPECT_EQ(A + O, A);
    EXPECT_EQ(order_bounded(A, 12), 6u);
    EXPECT_THROW(pt(E, 1, 1), DomainError);
}

TEST(GroupLaw, AxiomsOnRankTwoCurve) {
    // 389a1: y² + y = x³ + x² − 2x with independent points (0,0) and (−1,1).
    Curve E = C(0, 1, 1, -2, 0);
    Point G1 = pt(E, 0, 0), G2 = pt(E, -1, 1);
    std::mt19937_64 rng(1);
    auto rnd = [&] { return scalar_mul(G1, long(rng() % 7) - 3) + scalar_mul(G2, long(rng() % 7) - 3); };
    for (int i = 0; i < 15; ++i) {
        Point a = rnd(), b = rnd(), c = rnd();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_TRUE((a + (-a)).is_infinity());
        long m = long(rng() % 5), n = long(rng() % 5);
        EXPECT_EQ(scalar_mul(a, m + n), scalar_mul(a, m) + scalar_mul(a, n));
    }
}

TEST(DivisionPolynomials, KnownShapes) {
    Curve E = C(0, 0, 0, 0, 1);
    auto D = division_polynomials(E);
    EXPECT_EQ(D.two_division(), P("4,0,0,4"));
    EXPECT_EQ(D.f(3), P("0,12,0,0,3"));
    EXPECT_EQ(mult_by_m_xmap(E, 2).first, P("0,-8,0,0,1"));
    EXPECT_EQ(mult_by_m_xmap(E, 1), std::make_pair(P("0,1"), P("1")));
    Curve F = C(1, 0, 1, 266982, 42637516);
    auto DF = division_polynomials(F);
    EXPECT_EQ(DF.f(13).deg(), 84u);
    EXPECT_EQ(DF.f(8).deg(), 30u);
    for (long n = 3; n <= 11; n += 2) EXPECT_EQ(DF.f(n).deg(), std::size_t((n * n - 1) / 2));
}

TEST(DivisionPolynomials, Psi3DividesPsi9) {
    Curve E = C(0, 0, 0, 0, 1);
    auto D = division_polynomials(E);
    EXPECT_EQ(poly_gcd(D.f(3), D.f(9)), D.f(3).monic());
    EXPECT_TRUE((D.f(9) % D.f(3)).is_zero());
}

TEST(DivisionPolynomials, XMapMatchesGroupLaw) {
    Curve E = C(0, 1, 1, -2, 0);
    Point G = pt(E, 0, 0) + pt(E, -1, 1);
    for (long m : {2L, 3L, 4L, 5L}) {
        auto [phi, psi2] = mult_by_m_xmap(E, m);
        Rational x = G.x().rational_part();
        EXPECT_EQ(phi(x) / psi2(x), scalar_mul(G, m).x().rational_part()) << m;
    }
}

TEST(DivisionPolynomials, PrimitivePartMatchesRationalPoints) {
    const std::vector<Curve> curves{C(0, 0, 0, 0, 1),   C(0, -1, 1, -10, -20), C(1, 1, 1, -10, -10), C(1, 0, 1, 4, -6),
                                    C(1, -1, 1, -14, 29), C(1, 0, 0, -45, 81),  C(0, 0, 0, -1, 0),     C(1, 1, 1, 35, -28)};
    NumberField Q;
    for (const Curve& E : curves) {
        auto lt = lutz_nagell_torsion(E);
        for (long n = 2; n <= 9; ++n) {
            std::set<Rational> from_points, from_poly;
            for (const Point& p : lt.points)
                if (!p.is_infinity() && order_bounded(p, 12) == unsigned(n)) from_points.insert(p.x().rational_part());
            for (const Rational& x : rational_roots(primitive_division_polynomial(E, n)))
                if (!points_with_x(E, Q, Q.from_rational(x)).empty()) from_poly.insert(x);
            EXPECT_EQ(from_points, from_poly) << format_curve(E) << " n=" << n;
        }
    }
}

TEST(Twist, ShortFormTwists) {
    EXPECT_EQ(quadratic_twist(C(0, 0, 0, 1, 0), Rational(2)), C(0, 0, 0, 4, 0));
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20; ++i) {
        std::optional<Curve> maybe;
        try {
            maybe = C(long(rng() % 3) - 1, long(rng() % 3) - 1, long(rng() % 2), long(rng() % 21) - 10, long(rng() % 21) - 9);
        } catch (const SingularCurveError&) {
            continue;
        }
        const Curve& E = *maybe;
        long d = std::vector<long>{-1, 2, -2, 3, 5, -7}[rng() % 6];
        Curve T = quadratic_twist(E, Rational(d));
        EXPECT_EQ(T.j_invariant(), E.j_invariant());
        Curve TT = quadratic_twist(T, Rational(d));
        auto [A, B] = short_form(E);
        Curve S = short_curve(A, B);
        EXPECT_EQ(TT.j_invariant(), E.j_invariant());
        EXPECT_EQ(TT.discriminant(), S.discriminant() * pow(Rational(d), 12));
        EXPECT_EQ(quadratic_twist(E, Rational(1)).discriminant(), S.discriminant());
    }
}

TEST(Halving, RationalExamples) {
    Curve E = C(0, 0, 0, -1, 0);
    NumberField Q;
    EXPECT_TRUE(two_preimages(E, pt(E, 0, 0), Q).empty());
    EXPECT_EQ(two_preimages(E, Point::infinity(E, Q), Q).size(), 4u);
    EXPECT_TRUE(knapp_two_preimages(E, pt(E, 0, 0), Q)->empty());
}

TEST(Halving, KnappAgreesWithDivisionPolynomialPath) {
    // Full rational 2-torsion: y² = x(x+81)(x+256) and y² = x³ − x, over a few fields.
    const std::vector<Curve> curves{C(0, 337, 0, 20736, 0), C(0, 0, 0, -1, 0), C(1, 0, 1, -19, 26)};
    const std::vector<NumberField> fields{NumberField(), parse_field_spec("-1"), parse_field_spec("-1,2"),
                                          parse_field_spec("6,105")};
    for (const Curve& E : curves) {
        for (const NumberField& K : fields) {
            std::vector<Point> frontier = two_torsion_points(E, K);
            for (int depth = 0; depth < 3 && !frontier.empty(); ++depth) {
                std::vector<Point> next;
                for (const Point& P : frontier) {
                    auto a = two_preimages(E, P, K);
                    auto b = knapp_two_preimages(E, P, K);
                    ASSERT_TRUE(b.has_value());
                    EXPECT_EQ(a, *b);
                    for (auto& q : a)
                        if (!(q == P)) next.push_back(q);
                }
                frontier = std::move(next);
                if (frontier.size() > 16) frontier.erase(frontier.begin() + 16, frontier.end());
            }
        }
    }
}

TEST(LutzNagell, Examples) {
    auto a = lutz_nagell_torsion(C(0, 0, 0, 0, 1));
    EXPECT_EQ(a.structure, TorsionStructure(1, 6));
    EXPECT_EQ(a.points.size(), 6u);
    EXPECT_EQ(lutz_nagell_torsion(C(0, 0, 0, -1, 0)).structure, TorsionStructure(2, 2));
    auto b = lutz_nagell_torsion(C(0, -1, 1, -10, -20));
    EXPECT_EQ(b.structure, TorsionStructure(1, 5));
    ASSERT_EQ(b.generators.size(), 1u);
    EXPECT_EQ(order_bounded(b.generators[0], 12), 5u);
    EXPECT_EQ(lutz_nagell_torsion(C(1, 0, 1, -19, 26)).structure, TorsionStructure(2, 6));
}

TEST(Structure, FromCounts) {
    EXPECT_EQ(structure_from_counts({{2, 4}, {4, 8}, {8, 16}, {16, 32}}), TorsionStructure(2, 16));
    EXPECT_EQ(structure_from_counts({{1, 1}, {2, 1}, {3, 1}}), TorsionStructure(1, 1));
    EXPECT_EQ(structure_from_counts({{5, 25}}), TorsionStructure(5, 5));
    EXPECT_THROW(structure_from_counts({{2, 3}}), DomainError);
    EXPECT_THROW(TorsionStructure(2, 3), DomainError);
}

}  // namespace
}  // namespace qtors
