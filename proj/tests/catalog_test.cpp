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

#include <algorithm>

#include "qtors/catalog/tables.hpp"

namespace qtors {
namespace {

using T = TorsionStructure;
T C(unsigned long n) { return T(1, n); }
T CC(unsigned long a, unsigned long b) { return T(a, b); }

std::set<T> expand(std::initializer_list<unsigned long> cyclic, std::initializer_list<std::pair<unsigned long, std::vector<unsigned long>>> full) {
    std::set<T> s;
    for (unsigned long n : cyclic) s.insert(C(n));
    for (const auto& [k, ns] : full)
        for (unsigned long n : ns) s.insert(CC(k, k * n));
    return s;
}

TEST(Tables, Mazur) {
    EXPECT_EQ(classification_table(TableId::MAZUR),
              expand({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12}, {{2, {1, 2, 3, 4}}}));
    EXPECT_EQ(classification_table(TableId::MAZUR).size(), 15u);
}

TEST(Tables, QuadraticFields) {
    EXPECT_EQ(classification_table(TableId::KKM_QUAD),
              expand({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18},
                     {{2, {1, 2, 3, 4, 5, 6}}, {3, {1, 2}}, {4, {1}}}));
    EXPECT_EQ(classification_table(TableId::NAJMAN_QUAD_RAT),
              expand({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16}, {{2, {1, 2, 3, 4, 5, 6}}, {3, {1, 2}}, {4, {1}}}));
    EXPECT_EQ(classification_table(TableId::NAJMAN_CUBIC_RAT),
              expand({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 18, 21}, {{2, {1, 2, 3, 4, 7}}}));
}

TEST(Tables, QuarticGaloisLists) {
    const auto& galois = classification_table(TableId::THM_GALOIS_QUARTIC);
    const auto& cyclic = classification_table(TableId::THM_CYCLIC_QUARTIC);
    const auto& biquad = classification_table(TableId::THM_BIQUADRATIC);
    EXPECT_EQ(galois, expand({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 15, 16},
                             {{2, {1, 2, 3, 4, 5, 6, 8}}, {3, {1, 2}}, {4, {1, 2}}, {5, {1}}, {6, {1}}}));
    EXPECT_EQ(cyclic, expand({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 15, 16}, {{2, {1, 2, 3, 4, 5, 6, 8}}, {5, {1}}}));
    EXPECT_EQ(biquad, expand({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16},
                             {{2, {1, 2, 3, 4, 5, 6, 8}}, {3, {1, 2}}, {4, {1, 2}}, {6, {1}}}));
    std::set<T> uni = cyclic;
    uni.insert(biquad.begin(), biquad.end());
    EXPECT_EQ(uni, galois);
    for (const T& g : classification_table(TableId::BN_EXCLUDED_QUARTIC)) EXPECT_FALSE(galois.count(g)) << g;
    EXPECT_FALSE(galois.count(C(11)));
    EXPECT_FALSE(galois.count(C(14)));
    EXPECT_TRUE(galois.count(C(13)));
}

TEST(Tables, FujitaAndExclusions) {
    const auto& fujita = classification_table(TableId::FUJITA_L);
    EXPECT_EQ(fujita.size(), 20u);
    EXPECT_EQ(fujita, expand({1, 3, 5, 7, 9, 15}, {{2, {1, 2, 3, 4, 5, 6, 8}}, {3, {1}}, {4, {1, 2, 3, 4}}, {6, {1}}, {8, {1}}}));
    const auto& bn = classification_table(TableId::BN_EXCLUDED_QUARTIC);
    EXPECT_EQ(bn, expand({}, {{3, {4, 6, 9, 11, 13}}, {4, {3, 4, 7, 11, 13, 17}}, {8, {1}}}));
    EXPECT_EQ(classification_table(TableId::ZETA5_LIST).size(), 18u);
    EXPECT_TRUE(table_lookup(CC(5, 5), TableId::ZETA5_LIST));
    EXPECT_FALSE(table_lookup(CC(2, 10), TableId::ZETA5_LIST));
    EXPECT_EQ(classification_table(TableId::CM_QUARTIC),
              expand({1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 13, 21}, {{2, {1, 2, 3, 4, 5}}, {3, {1, 2}}, {4, {1}}}));
}

TEST(Tables, Lookup) {
    EXPECT_TRUE(table_lookup(CC(2, 16), TableId::THM_CYCLIC_QUARTIC));
    EXPECT_TRUE(table_lookup(CC(4, 12), TableId::BN_EXCLUDED_QUARTIC));
    EXPECT_FALSE(table_lookup(C(11), TableId::MAZUR));
    EXPECT_FALSE(table_lookup(C(13), TableId::THM_BIQUADRATIC));
    for (TableId id : kAllTables) EXPECT_FALSE(to_string(id).empty());
}

TEST(GrowthTable, Rows) {
    const auto& rows = growth_table();
    EXPECT_EQ(rows.size(), 14u);
    for (const auto& [g, set] : rows) {
        EXPECT_TRUE(set.count(g)) << g;
        EXPECT_TRUE(table_lookup(g, TableId::MAZUR)) << g;
        for (const T& h : set) {
            EXPECT_TRUE(h.contains(g)) << g << " -> " << h;
            EXPECT_TRUE(table_lookup(h, TableId::NAJMAN_QUAD_RAT)) << h;
        }
    }
    EXPECT_FALSE(rows.count(C(9)));
    EXPECT_FALSE(rows.count(CC(2, 6)) == 0);
}

TEST(GrowthTable, Consistency) {
    EXPECT_TRUE(growth_consistency(C(5), C(15)).allowed);
    EXPECT_FALSE(growth_consistency(C(7), C(14)).allowed);
    EXPECT_TRUE(growth_consistency(C(1), C(9)).allowed);
    EXPECT_TRUE(growth_consistency(C(2), CC(2, 10)).allowed);
    EXPECT_FALSE(growth_consistency(C(3), C(9)).allowed);
    GrowthCheck unknown = growth_consistency(C(9), C(9));
    EXPECT_TRUE(unknown.allowed);
    EXPECT_FALSE(unknown.known_row);
}

TEST(Verdict, Examples) {
    EXPECT_TRUE(verdict(C(15), GaloisType::CyclicQuartic, false).consistent);
    EXPECT_FALSE(verdict(C(14), GaloisType::CyclicQuartic, false).consistent);
    EXPECT_FALSE(verdict(C(13), GaloisType::Biquadratic, false).consistent);
    EXPECT_TRUE(verdict(CC(5, 5), GaloisType::CyclicQuartic, true).consistent);
    EXPECT_FALSE(verdict(CC(2, 10), GaloisType::CyclicQuartic, true).consistent);
    EXPECT_TRUE(verdict(CC(2, 16), GaloisType::Biquadratic, false).consistent);
    EXPECT_TRUE(verdict(CC(2, 8), GaloisType::Rational, false).consistent);
    EXPECT_FALSE(verdict(C(16), GaloisType::Rational, false).consistent);
    EXPECT_TRUE(verdict(C(16), GaloisType::Quadratic, false).consistent);
    EXPECT_FALSE(verdict(C(1), GaloisType::NonGaloisQuartic, false).consistent);
    Verdict cm = verdict(C(21), GaloisType::Biquadratic, false);
    EXPECT_FALSE(cm.consistent);
    EXPECT_TRUE(std::any_of(cm.details.begin(), cm.details.end(),
                            [](const std::string& d) { return d.find("CM") != std::string::npos; }));
}

}  // namespace
}  // namespace qtors
