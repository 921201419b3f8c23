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

#include "qtors/catalog/corpus.hpp"
#include "qtors/catalog/families.hpp"
#include "qtors/catalog/tables.hpp"

namespace qtors {
namespace {

using T = TorsionStructure;

TEST(Families, FujitaConstructor) {
    FamilyPoint a = family_fujita(2);
    EXPECT_EQ(a.curve, Curve(0, 337, 0, 20736, 0));  // x(x + 81)(x + 256)
    EXPECT_EQ(a.radicands, (std::vector<Integer>{6, 105}));
    EXPECT_EQ(a.expected, T(2, 16));
    FamilyPoint b = family_fujita(3);
    EXPECT_EQ(b.curve, Curve(0, 4096 + 1296, 0, 4096 * 1296, 0));
    EXPECT_EQ(b.radicands, (std::vector<Integer>{6, 70}));
    EXPECT_THROW(family_fujita(1), DomainError);
    EXPECT_THROW(family_fujita(-4), DomainError);
}

TEST(Families, JklConstructors) {
    FamilyPoint a = family_jkl(Family::JKL_4x8, Rational(2));
    // ν = −7/100, c = ν² − 1/16 = −36/625
    EXPECT_EQ(a.curve, Curve(1, Rational(36, 625), Rational(36, 625), 0, 0));
    EXPECT_EQ(a.radicands, (std::vector<Integer>{-1, -7}));
    FamilyPoint a2 = family_jkl(Family::JKL_4x8, Rational(2), FamilyVariant::AsPrinted);
    EXPECT_EQ(a2.curve, Curve(1, 0, Rational(36, 625) * Rational(661, 625), 0, 0));  // a3 = −c(1 − c)
    FamilyPoint b = family_jkl(Family::JKL_6x6, Rational(2));
    EXPECT_EQ(b.radicands, (std::vector<Integer>{-3, 65}));
    // μ = 17/12
    Rational mu(17, 12), m3 = mu * mu * mu;
    EXPECT_EQ(b.curve.a4(), -27 * mu * (m3 + 8));
    EXPECT_EQ(b.curve.a6(), 54 * (m3 * m3 - 20 * m3 - 8));
    EXPECT_EQ(family_jkl(Family::JKL_6x6, Rational(2), FamilyVariant::AsPrinted).curve.a6(), 54 * (m3 * m3 - 20 * m3 - 9));
    for (Rational t : {Rational(0), Rational(1), Rational(-1)}) EXPECT_THROW(family_jkl(Family::JKL_4x8, t), DomainError);
    for (Rational t : {Rational(0), Rational(1), Rational(-1, 2)}) EXPECT_THROW(family_jkl(Family::JKL_6x6, t), DomainError);
    EXPECT_THROW(family_jkl(Family::FUJITA_2x16, Rational(2)), DomainError);
}

TEST(Families, J78608) {
    for (Rational s : {Rational(1), Rational(3), Rational(-2, 7)}) {
        FamilyPoint p = family_j78608(s);
        EXPECT_EQ(p.curve.j_invariant(), Rational(78608));
    }
    EXPECT_EQ(family_j78608(Rational(1)).curve, Curve(0, 10, 0, 5, 0));
    EXPECT_EQ(family_j78608(Rational(1)).curve.discriminant(), Rational(32000));
    EXPECT_THROW(family_j78608(Rational(0)), DomainError);
}

TEST(Families, SeedsAreInCorpus) {
    std::vector<Curve> seeds{family_fujita(2).curve, family_jkl(Family::JKL_4x8, Rational(2)).curve,
                             family_jkl(Family::JKL_6x6, Rational(2)).curve, family_j78608(Rational(1)).curve};
    for (const Curve& E : seeds) {
        bool found = false;
        for (const CorpusCurve& c : embedded_corpus()) found |= parse_curve_spec(c.spec).curve == E;
        EXPECT_TRUE(found) << format_curve(E);
    }
}

std::vector<Rational> range(long a, long b) {
    std::vector<Rational> v;
    for (long t = a; t <= b; ++t) v.emplace_back(t);
    return v;
}

TEST(FamilyScan, Fujita) {
    auto rows = run_family_scan(Family::FUJITA_2x16, range(2, 5));
    ASSERT_EQ(rows.size(), 4u);
    for (const ScanRow& r : rows) EXPECT_TRUE(r.match()) << r.parameter << " " << r.error;
}

TEST(FamilyScan, JklSixBySix) {
    auto rows = run_family_scan(Family::JKL_6x6, range(2, 4));
    for (const ScanRow& r : rows) EXPECT_EQ(r.computed, T(6, 6)) << r.parameter << " " << r.error;
    auto printed = run_family_scan(Family::JKL_6x6, range(2, 4), FamilyVariant::AsPrinted);
    EXPECT_EQ(match_rate(printed), 0.0);
}

TEST(FamilyScan, JklFourByEightResolvesVariant) {
    auto rows = run_family_scan(Family::JKL_4x8, range(2, 5));
    EXPECT_GE(match_rate(rows), 0.9);
    for (const ScanRow& r : rows) {
        EXPECT_EQ(r.variant, "x_squared");
        EXPECT_TRUE(r.match()) << r.parameter << " " << r.error;
    }
    auto printed = run_family_scan(Family::JKL_4x8, range(2, 5), FamilyVariant::AsPrinted);
    EXPECT_EQ(match_rate(printed), 0.0);
}

TEST(FamilyScan, ExclusionsBecomeRows) {
    auto rows = run_family_scan(Family::JKL_4x8, {Rational(1), Rational(3)});
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_FALSE(rows[0].error.empty());
    EXPECT_FALSE(rows[0].match());
    EXPECT_TRUE(rows[1].match());
    EXPECT_TRUE(run_family_scan(Family::FUJITA_2x16, {}).empty());
}

TEST(TorsionPreservingQuadratic, Examples) {
    Curve E(0, 0, 0, 0, 2);
    NumberField F = quadratic_field(Rational(2));
    Integer d = torsion_preserving_quadratic(E, F);
    EXPECT_FALSE(is_rational_square(Rational(2 * d)));
    NumberField K = biquadratic_field(Rational(2), Rational(d));
    EXPECT_EQ(torsion_over_field(E, K).structure, torsion_over_field(E, F).structure);

    Curve E11(0, -1, 1, -10, -20);
    NumberField F5 = quadratic_field(Rational(5));
    Integer d5 = torsion_preserving_quadratic(E11, F5);
    EXPECT_NE(squarefree_part(Integer(5 * d5)), 1);
    EXPECT_EQ(torsion_over_field(E11, biquadratic_field(Rational(5), Rational(d5))).structure,
              torsion_over_field(E11, F5).structure);
    EXPECT_THROW(torsion_preserving_quadratic(E11, parse_field_spec("1,1,1,1")), DomainError);
}

TEST(TorsionPreservingQuadratic, CandidateOrder) {
    auto c = quadratic_candidates(7);
    EXPECT_EQ(c, (std::vector<Integer>{-1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7}));
}

// Every corpus curve over every corpus field: all engine checks pass (torsion_over_field
// throws otherwise), and the result conforms to the governing classification table.
TEST(Corpus, InvariantsAndVerdictsOverCorpusFields) {
    for (std::string_view fs : corpus_fields()) {
        NumberField K = parse_field_spec(fs);
        const bool zeta5 = fs == "1,1,1,1";
        for (const CorpusCurve& c : embedded_corpus()) {
            Curve E = parse_curve_spec(c.spec).curve;
            TorsionReport r = torsion_over_field(E, K);
            EXPECT_TRUE(r.structure.contains(c.rational)) << c.spec << " over " << fs;
            Verdict v = verdict(r.structure, r.galois_type, zeta5);
            EXPECT_TRUE(v.consistent) << c.spec << " over " << fs << ": " << (v.details.empty() ? "" : v.details[0]);
        }
    }
}

TEST(Corpus, ExampleRowsAreConsistent) {
    for (const ExampleRow& row : example_rows()) {
        NumberField K = parse_field_spec(row.field);
        TorsionReport r = torsion_over_field(parse_curve_spec(row.curve).curve, K);
        EXPECT_TRUE(verdict(r.structure, r.galois_type, row.field == "1,1,1,1").consistent) << row.index;
    }
}

}  // namespace
}  // namespace qtors
