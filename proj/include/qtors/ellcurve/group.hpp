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

#ifndef QTORS_ELLCURVE_GROUP_HPP
#define QTORS_ELLCURVE_GROUP_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "qtors/ellcurve/curve.hpp"
#include "qtors/error.hpp"
#include "qtors/torsion/structure.hpp"

namespace qtors {

/// Every element of the subgroup generated by gens, in canonical order.
inline std::vector<Point> subgroup_generated(const std::vector<Point>& gens, const Curve& E, const NumberField& K,
                                             std::size_t limit = 4096) {
    std::vector<Point> elems{Point::infinity(E, K)};
    for (const Point& g : gens) {
        std::vector<Point> next = elems;
        Point m = g;
        while (!m.is_infinity()) {
            bool seen = std::find(elems.begin(), elems.end(), m) != elems.end();
            if (seen) break;
            for (const Point& e : elems) next.push_back(e + m);
            if (next.size() > limit) throw InvariantViolation("generated subgroup exceeds the enumeration limit");
            m = m + g;
        }
        elems = std::move(next);
        std::sort(elems.begin(), elems.end(), point_less);
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    }
    return elems;
}

/// Deterministic generators of a finite group given as the full list of its points:
/// the canonically smallest point of order d2, then the canonically smallest point of
/// order d1 whose cyclic subgroup meets the first one trivially.
inline std::vector<Point> choose_generators(std::vector<Point> all, const TorsionStructure& g) {
    if (all.size() != g.order()) throw InvariantViolation("point count does not match the group order");
    std::sort(all.begin(), all.end(), point_less);
    std::vector<Point> gens;
    if (g.d2() == 1) return gens;
    auto order_of = [&](const Point& P) { return order_bounded(P, static_cast<unsigned>(g.d2())); };
    std::optional<Point> p1;
    for (const Point& P : all) {
        if (order_of(P) == g.d2()) {
            p1 = P;
            break;
        }
    }
    if (!p1) throw InvariantViolation("no point of maximal order");
    gens.push_back(*p1);
    if (g.d1() > 1) {
        std::vector<Point> cyc;
        Point m = *p1;
        for (unsigned long k = 1; k < g.d2(); ++k, m = m + *p1) cyc.push_back(m);
        for (const Point& Q : all) {
            if (order_of(Q) != g.d1()) continue;
            bool independent = true;
            Point mq = Q;
            for (unsigned long k = 1; k < g.d1() && independent; ++k, mq = mq + Q)
                independent = std::find(cyc.begin(), cyc.end(), mq) == cyc.end();
            if (independent) {
                gens.push_back(Q);
                break;
            }
        }
        if (gens.size() != 2) throw InvariantViolation("no complementary generator found");
    }
    const Curve& E = all.front().curve();
    const NumberField& K = all.front().field();
    if (subgroup_generated(gens, E, K).size() != g.order()) throw InvariantViolation("generators do not span the group");
    return gens;
}

}  // namespace qtors

#endif  // QTORS_ELLCURVE_GROUP_HPP
