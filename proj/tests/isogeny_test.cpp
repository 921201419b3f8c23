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

#include <sstream>

#include "qtors/ellcurve/curve.hpp"
#include "qtors/ellcurve/lutz_nagell.hpp"
#include "qtors/isogeny/isogeny.hpp"

namespace qtors {
namespace {

const ModularPolynomial& phi(unsigned level) {
    static const ModularPolynomial p3 = load_modular_polynomial_file(3, modular_polynomial_dir());
    static const ModularPolynomial p5 = load_modular_polynomial_file(5, modular_polynomial_dir());
    return level == 3 ? p3 : p5;
}

Rational j_of(long a1, long a2, long a3, long a4, long a6) { return Curve(a1, a2, a3, a4, a6).j_invariant(); }

TEST(IsogenyDegrees, Table) {
    EXPECT_FALSE(allowed_rational_isogeny_degree(20));
    EXPECT_TRUE(allowed_rational_isogeny_degree(25));
    EXPECT_TRUE(allowed_rational_isogeny_degree(15));
    EXPECT_TRUE(allowed_rational_isogeny_degree(163));
    EXPECT_FALSE(allowed_rational_isogeny_degree(163, false));
    EXPECT_TRUE(allowed_rational_isogeny_degree(163, true));
    EXPECT_FALSE(allowed_rational_isogeny_degree(19, false));
    EXPECT_TRUE(allowed_rational_isogeny_degree(19));
    EXPECT_FALSE(allowed_rational_isogeny_degree(22));
    EXPECT_THROW(allowed_rational_isogeny_degree(0), DomainError);
    EXPECT_EQ(rational_isogeny_degrees().size(), 26u);
    EXPECT_EQ(non_cm_rational_isogeny_degrees().size(), 21u);
    for (unsigned long n : non_cm_rational_isogeny_degrees()) EXPECT_TRUE(rational_isogeny_degrees().count(n));
}

TEST(ModularPolynomial, LoadsShippedFiles) {
    for (unsigned level : {3u, 5u}) {
        const ModularPolynomial& p = phi(level);
        EXPECT_EQ(p.level(), level);
        EXPECT_EQ(p.coeff(level + 1, 0), 1);
        EXPECT_EQ(p.coeff(level, level), -1);
        for (unsigned i = 0; i <= level + 1; ++i)
            for (unsigned j = 0; j <= level + 1; ++j) EXPECT_EQ(p.coeff(i, j), p.coeff(j, i));
        for (const Rational& y : {Rational(0), Rational(1728), Rational(-7, 3)})
            EXPECT_EQ(p.specialize(y).degree(), static_cast<int>(level + 1));
    }
    EXPECT_EQ(phi(3).coeff(2, 2), Integer("2587918086"));
}

TEST(ModularPolynomial, RejectsMalformedInput) {
    auto load = [](const std::string& text) {
        std::istringstream in(text);
        return load_modular_polynomial(3, in);
    };
    std::ostringstream good;
    for (unsigned i = 0; i <= 4; ++i)
        for (unsigned j = 0; j <= i; ++j)
            if (phi(3).coeff(i, j) != 0) good << i << ' ' << j << ' ' << phi(3).coeff(i, j).get_str() << '\n';
    EXPECT_NO_THROW(load(good.str()));
    EXPECT_NO_THROW(load(good.str() + "# trailing comment\n\n1 0 " + phi(3).coeff(1, 0).get_str() + "\n0 1 " +
                         phi(3).coeff(1, 0).get_str() + "\n"));
    EXPECT_THROW(load(good.str() + "0 1 5\n"), ParseError);
    EXPECT_THROW(load(good.str() + "2 1 x\n"), ParseError);
    EXPECT_THROW(load(good.str() + "2 1\n"), ParseError);
    EXPECT_THROW(load(good.str() + "5 0 1\n"), ParseError);
    EXPECT_THROW(load(good.str() + "4 1 7\n"), ParseError);
    EXPECT_THROW(load("4 0 2\n3 3 -1\n"), ParseError);
    EXPECT_THROW(load("3 3 -1\n"), ParseError);
    EXPECT_THROW(load_modular_polynomial_file(5, "/nonexistent-dir"), ParseError);
    std::istringstream in("");
    EXPECT_THROW(load_modular_polynomial(7, in), DomainError);
}

TEST(ModularPolynomial, IsogenyClassOfConductor11) {
    Rational j1 = j_of(0, -1, 1, -10, -20);
    Rational j2 = j_of(0, -1, 1, -7820, -263580);
    Rational j3 = j_of(0, -1, 1, 0, 0);
    EXPECT_EQ(phi(5).evaluate(j1, j2), 0);
    EXPECT_EQ(phi(5).evaluate(j1, j3), 0);
    EXPECT_EQ(phi(5).evaluate(j3, j1), 0);
    EXPECT_NE(phi(5).evaluate(j2, j3), 0);
    EXPECT_NE(phi(3).evaluate(j1, j2), 0);
}

TEST(ModularPolynomial, RootFoundByTestIsIsogenous) {
    Rational j = j_of(0, -1, 1, -10, -20);
    ASSERT_TRUE(j_isogeny_test(j, phi(5)));
    for (const Rational& r : rational_roots(phi(5).specialize(j))) {
        EXPECT_EQ(phi(5).evaluate(r, j), 0);
        EXPECT_EQ(phi(5).evaluate(j, r), 0);
    }
}

TEST(ModularPolynomial, ExclusionsAt78608) {
    EXPECT_FALSE(j_isogeny_test(Rational(78608), phi(5)));
    EXPECT_FALSE(j_isogeny_test(Rational(78608), phi(3)));
    EXPECT_EQ(j_of(0, 10, 0, 5, 0), 78608);
}

TEST(ModularPolynomial, RationalTorsionImpliesIsogeny) {
    struct Case {
        long a[5];
    };
    const Case cases[] = {{{0, -1, 1, -10, -20}}, {{0, -1, 1, 0, 0}},  {{0, 0, 1, 0, 0}},    {{0, 1, 1, -9, -15}},
                          {{1, 0, 1, 4, -6}},     {{1, 1, 1, -10, -10}}, {{1, 0, 0, -45, 81}}, {{0, 0, 1, -1, 0}}};
    for (const Case& c : cases) {
        Curve E(c.a[0], c.a[1], c.a[2], c.a[3], c.a[4]);
        TorsionStructure t = lutz_nagell_torsion(E).structure;
        for (unsigned p : {3u, 5u}) {
            if (t.d2() % p == 0) EXPECT_TRUE(j_isogeny_test(E.j_invariant(), phi(p))) << format_curve(E) << " p=" << p;
        }
    }
}

TEST(IsogenyAudit, Structures) {
    EXPECT_TRUE(cyclic_torsion_isogeny_audit(TorsionStructure(2, 16)).empty());
    EXPECT_TRUE(cyclic_torsion_isogeny_audit(TorsionStructure(1, 15)).empty());
    EXPECT_TRUE(cyclic_torsion_isogeny_audit(TorsionStructure(1, 13)).empty());
    EXPECT_TRUE(cyclic_torsion_isogeny_audit(TorsionStructure(5, 5)).empty());
    EXPECT_TRUE(cyclic_torsion_isogeny_audit(TorsionStructure(2, 12)).empty());
    EXPECT_FALSE(cyclic_torsion_isogeny_audit(TorsionStructure(1, 20)).empty());
    EXPECT_FALSE(cyclic_torsion_isogeny_audit(TorsionStructure(1, 22)).empty());
    EXPECT_FALSE(cyclic_torsion_isogeny_audit(TorsionStructure(2, 64)).empty());
    EXPECT_TRUE(cyclic_torsion_isogeny_audit(TorsionStructure(1, 1)).empty());
}

}  // namespace
}  // namespace qtors
