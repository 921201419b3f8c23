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

#ifndef QTORS_CATALOG_TABLES_HPP
#define QTORS_CATALOG_TABLES_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qtors/error.hpp"
#include "qtors/numfield/field.hpp"
#include "qtors/torsion/structure.hpp"

namespace qtors {

enum class TableId {
    MAZUR,
    KKM_QUAD,
    NAJMAN_QUAD_RAT,
    NAJMAN_CUBIC_RAT,
    THM_GALOIS_QUARTIC,
    THM_CYCLIC_QUARTIC,
    THM_BIQUADRATIC,
    FUJITA_L,
    BN_EXCLUDED_QUARTIC,
    ZETA5_LIST,
    CM_QUARTIC,
};

inline constexpr std::array<TableId, 11> kAllTables{
    TableId::MAZUR,           TableId::KKM_QUAD,           TableId::NAJMAN_QUAD_RAT,
    TableId::NAJMAN_CUBIC_RAT, TableId::THM_GALOIS_QUARTIC, TableId::THM_CYCLIC_QUARTIC,
    TableId::THM_BIQUADRATIC, TableId::FUJITA_L,           TableId::BN_EXCLUDED_QUARTIC,
    TableId::ZETA5_LIST,      TableId::CM_QUARTIC};

inline std::string_view to_string(TableId id) {
    switch (id) {
        case TableId::MAZUR: return "MAZUR";
        case TableId::KKM_QUAD: return "KKM_QUAD";
        case TableId::NAJMAN_QUAD_RAT: return "NAJMAN_QUAD_RAT";
        case TableId::NAJMAN_CUBIC_RAT: return "NAJMAN_CUBIC_RAT";
        case TableId::THM_GALOIS_QUARTIC: return "THM_GALOIS_QUARTIC";
        case TableId::THM_CYCLIC_QUARTIC: return "THM_CYCLIC_QUARTIC";
        case TableId::THM_BIQUADRATIC: return "THM_BIQUADRATIC";
        case TableId::FUJITA_L: return "FUJITA_L";
        case TableId::BN_EXCLUDED_QUARTIC: return "BN_EXCLUDED_QUARTIC";
        case TableId::ZETA5_LIST: return "ZETA5_LIST";
        case TableId::CM_QUARTIC: return "CM_QUARTIC";
    }
    return "?";
}

namespace detail {

using Group = TorsionStructure;
using GroupSet = std::set<TorsionStructure>;

inline void add_cyclic(GroupSet& s, std::initializer_list<unsigned long> ns) {
    for (unsigned long n : ns) s.insert(Group(1, n));
}
inline void add_cyclic_range(GroupSet& s, unsigned long lo, unsigned long hi, std::initializer_list<unsigned long> skip = {}) {
    for (unsigned long n = lo; n <= hi; ++n)
        if (std::find(skip.begin(), skip.end(), n) == skip.end()) s.insert(Group(1, n));
}
// ℤ/k ⊕ ℤ/kN for each N.
inline void add_full(GroupSet& s, unsigned long k, std::initializer_list<unsigned long> ns) {
    for (unsigned long n : ns) s.insert(Group(k, k * n));
}

inline GroupSet build_table(TableId id) {
    GroupSet s;
    switch (id) {
        case TableId::MAZUR:
            add_cyclic_range(s, 1, 10);
            add_cyclic(s, {12});
            add_full(s, 2, {1, 2, 3, 4});
            break;
        case TableId::KKM_QUAD:
            add_cyclic_range(s, 1, 18, {17});
            add_full(s, 2, {1, 2, 3, 4, 5, 6});
            add_full(s, 3, {1, 2});
            add_full(s, 4, {1});
            break;
        case TableId::NAJMAN_QUAD_RAT:
            add_cyclic_range(s, 1, 10);
            add_cyclic(s, {12, 15, 16});
            add_full(s, 2, {1, 2, 3, 4, 5, 6});
            add_full(s, 3, {1, 2});
            add_full(s, 4, {1});
            break;
        case TableId::NAJMAN_CUBIC_RAT:
            add_cyclic_range(s, 1, 10);
            add_cyclic(s, {12, 13, 14, 18, 21});
            add_full(s, 2, {1, 2, 3, 4, 7});
            break;
        case TableId::THM_GALOIS_QUARTIC:
            add_cyclic_range(s, 1, 16, {11, 14});
            add_full(s, 2, {1, 2, 3, 4, 5, 6, 8});
            add_full(s, 3, {1, 2});
            add_full(s, 4, {1, 2});
            add_full(s, 5, {1});
            add_full(s, 6, {1});
            break;
        case TableId::THM_CYCLIC_QUARTIC:
            add_cyclic_range(s, 1, 10);
            add_cyclic(s, {12, 13, 15, 16});
            add_full(s, 2, {1, 2, 3, 4, 5, 6, 8});
            add_full(s, 5, {1});
            break;
        case TableId::THM_BIQUADRATIC:
            add_cyclic_range(s, 1, 10);
            add_cyclic(s, {12, 15, 16});
            add_full(s, 2, {1, 2, 3, 4, 5, 6, 8});
            add_full(s, 3, {1, 2});
            add_full(s, 4, {1, 2});
            add_full(s, 6, {1});
            break;
        case TableId::FUJITA_L:
            add_cyclic(s, {1, 3, 5, 7, 9, 15});
            add_full(s, 2, {1, 2, 3, 4, 5, 6, 8});
            add_full(s, 3, {1});
            add_full(s, 4, {1, 2, 3, 4});
            add_full(s, 6, {1});
            add_full(s, 8, {1});
            break;
        case TableId::BN_EXCLUDED_QUARTIC:
            add_full(s, 3, {4, 6, 9, 11, 13});
            add_full(s, 4, {3, 4, 7, 11, 13, 17});
            add_full(s, 8, {1});
            break;
        case TableId::ZETA5_LIST:
            s = build_table(TableId::MAZUR);
            add_cyclic(s, {15, 16});
            add_full(s, 5, {1});
            break;
        case TableId::CM_QUARTIC:
            add_cyclic_range(s, 1, 8);
            add_cyclic(s, {10, 12, 13, 21});
            add_full(s, 2, {1, 2, 3, 4, 5});
            add_full(s, 3, {1, 2});
            add_full(s, 4, {1});
            break;
    }
    return s;
}

}  // namespace detail

inline const std::set<TorsionStructure>& classification_table(TableId id) {
    static const std::map<TableId, std::set<TorsionStructure>> tables = [] {
        std::map<TableId, std::set<TorsionStructure>> m;
        for (TableId t : kAllTables) m.emplace(t, detail::build_table(t));
        return m;
    }();
    return tables.at(id);
}

inline bool table_lookup(const TorsionStructure& g, TableId id) { return classification_table(id).count(g) > 0; }

/// Φ_ℚ(2, G): the torsion groups E(F)_tors over quadratic F for E(ℚ)_tors ≅ G.
inline const std::map<TorsionStructure, std::set<TorsionStructure>>& growth_table() {
    static const std::map<TorsionStructure, std::set<TorsionStructure>> rows = [] {
        auto C = [](unsigned long n) { return TorsionStructure(1, n); };
        auto CC = [](unsigned long a, unsigned long b) { return TorsionStructure(a, b); };
        std::map<TorsionStructure, std::set<TorsionStructure>> r;
        r[C(1)] = {C(1), C(3), C(5), C(7), C(9)};
        r[C(2)] = {C(2), C(4), C(6), C(8), C(10), C(12), C(16), CC(2, 2), CC(2, 6), CC(2, 10)};
        r[C(3)] = {C(3), C(15), CC(3, 3)};
        r[C(4)] = {C(4), C(8), C(12), CC(2, 4), CC(2, 8), CC(2, 12), CC(4, 4)};
        r[C(5)] = {C(5), C(15)};
        r[C(6)] = {C(6), C(12), CC(2, 6), CC(3, 6)};
        r[C(7)] = {C(7)};
        r[C(8)] = {C(8), C(16), CC(2, 8)};
        r[C(10)] = {C(10), CC(2, 10)};
        r[C(12)] = {C(12), CC(2, 12)};
        r[CC(2, 2)] = {CC(2, 2), CC(2, 4), CC(2, 6), CC(2, 8), CC(2, 12)};
        r[CC(2, 4)] = {CC(2, 4), CC(2, 8), CC(4, 4)};
        r[CC(2, 6)] = {CC(2, 6), CC(2, 12)};
        r[CC(2, 8)] = {CC(2, 8)};
        return r;
    }();
    return rows;
}

struct GrowthCheck {
    bool allowed;
    bool known_row;  // false: E(ℚ)_tors is not a row key, so the table says nothing
};

inline GrowthCheck growth_consistency(const TorsionStructure& g_q, const TorsionStructure& g_f) {
    const auto& rows = growth_table();
    auto it = rows.find(g_q);
    if (it == rows.end()) return {true, false};
    return {it->second.count(g_f) > 0, true};
}

struct Verdict {
    bool consistent = true;
    std::vector<std::string> details;
};

/// Table governing E(K)_tors for E/ℚ by the Galois type of K; absent for non-Galois quartics.
inline std::optional<TableId> governing_table(GaloisType g) {
    switch (g) {
        case GaloisType::Rational: return TableId::MAZUR;
        case GaloisType::Quadratic: return TableId::NAJMAN_QUAD_RAT;
        case GaloisType::CyclicQuartic: return TableId::THM_CYCLIC_QUARTIC;
        case GaloisType::Biquadratic: return TableId::THM_BIQUADRATIC;
        case GaloisType::NonGaloisQuartic: return std::nullopt;
    }
    return std::nullopt;
}

/// Membership in the governing table, non-membership (as a subgroup) of every
/// excluded quartic group, and the ℚ(ζ₅) list when K = ℚ(ζ₅).
inline Verdict verdict(const TorsionStructure& g, GaloisType type, bool field_is_zeta5) {
    Verdict v;
    auto fail = [&](std::string why) {
        v.consistent = false;
        v.details.push_back(std::move(why));
    };
    if (auto id = governing_table(type)) {
        if (!table_lookup(g, *id)) fail(g.to_string() + " is not in " + std::string(to_string(*id)));
    } else {
        fail("no classification table for a non-Galois quartic field");
    }
    for (const TorsionStructure& bad : classification_table(TableId::BN_EXCLUDED_QUARTIC))
        if (g.contains(bad)) fail(g.to_string() + " contains the excluded group " + bad.to_string());
    if (field_is_zeta5 && !table_lookup(g, TableId::ZETA5_LIST)) fail(g.to_string() + " is not in ZETA5_LIST");
    if (!v.consistent && table_lookup(g, TableId::CM_QUARTIC) && type != GaloisType::Rational)
        v.details.push_back("note: " + g.to_string() + " occurs in the CM quartic list");
    return v;
}

}  // namespace qtors

#endif  // QTORS_CATALOG_TABLES_HPP
