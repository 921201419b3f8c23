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

#ifndef QTORS_TORSION_BOUNDS_HPP
#define QTORS_TORSION_BOUNDS_HPP

#include <set>

#include "qtors/error.hpp"
#include "qtors/numfield/field.hpp"
#include "qtors/torsion/structure.hpp"

namespace qtors {

/// Primes that can divide E(K)_tors for E/ℚ and [K:ℚ] ≤ 4. Taken as given.
inline const std::set<unsigned long>& torsion_primes() {
    static const std::set<unsigned long> s{2, 3, 5, 7, 13};
    return s;
}

/// Largest possible p-primary part of E(K)_tors for E/ℚ over a field of the given type.
inline TorsionStructure p_primary_bound(unsigned long p, GaloisType g) {
    struct Row {
        unsigned long p;
        TorsionStructure cyclic, biquad, quad, rat;
    };
    static constexpr Row kRows[] = {
        {2, {2, 16}, {4, 16}, {4, 16}, {2, 8}},
        {3, {1, 9}, {3, 9}, {3, 9}, {1, 9}},
        {5, {5, 5}, {1, 5}, {1, 5}, {1, 5}},
        {7, {1, 7}, {1, 7}, {1, 7}, {1, 7}},
        {13, {1, 13}, {1, 1}, {1, 1}, {1, 1}},
    };
    if (g == GaloisType::NonGaloisQuartic) throw UnsupportedField("no torsion bounds for non-Galois quartic fields");
    for (const Row& r : kRows) {
        if (r.p != p) continue;
        switch (g) {
            case GaloisType::CyclicQuartic: return r.cyclic;
            case GaloisType::Biquadratic: return r.biquad;
            case GaloisType::Quadratic: return r.quad;
            default: return r.rat;
        }
    }
    return TorsionStructure(1, 1);
}

/// Levels n for which E(K)[n] ≅ (ℤ/n)² can occur.
inline std::set<unsigned long> full_level_allowed(GaloisType g) {
    switch (g) {
        case GaloisType::CyclicQuartic: return {1, 2, 5, 10};
        case GaloisType::Biquadratic: return {1, 2, 3, 4, 6};
        case GaloisType::Quadratic: return {1, 2, 3, 4};
        case GaloisType::Rational: return {1, 2};
        case GaloisType::NonGaloisQuartic: break;
    }
    throw UnsupportedField("no full-level table for non-Galois quartic fields");
}

/// Landau's function: the largest order of an element of S_n, 1 ≤ n ≤ 8.
inline unsigned long landau_g(unsigned n) {
    static constexpr unsigned long kG[] = {1, 2, 3, 4, 6, 6, 12, 15};
    if (n < 1 || n > 8) throw DomainError("Landau function tabulated for 1 ≤ n ≤ 8");
    return kG[n - 1];
}

}  // namespace qtors

#endif  // QTORS_TORSION_BOUNDS_HPP
