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

#ifndef QTORS_ELLCURVE_HALVING_HPP
#define QTORS_ELLCURVE_HALVING_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "qtors/ellcurve/curve.hpp"
#include "qtors/ellcurve/divpoly.hpp"
#include "qtors/numfield/roots.hpp"

namespace qtors {

namespace detail {

inline void sort_points(std::vector<Point>& v) {
    std::sort(v.begin(), v.end(), point_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

/// E(K)[2], including O.
inline std::vector<Point> two_torsion_points(const Curve& E, const NumberField& K) {
    std::vector<Point> out{Point::infinity(E, K)};
    for (const FieldElement& x : roots_in_field(E.two_division(), K)) {
        FieldElement y = -(x * E.a1() + E.a3()) / Rational(2);
        out.emplace_back(E, K, x, y);
    }
    detail::sort_points(out);
    return out;
}

/// All Q in E(K) with [2]Q = P, from the K-roots of φ₂(x) − x_P·ψ₂²(x).
inline std::vector<Point> two_preimages(const Curve& E, const Point& P, const NumberField& K) {
    if (P.is_infinity()) return two_torsion_points(E, K);
    auto [phi, den] = mult_by_m_xmap(E, 2);
    KPoly h = lift(phi, K) - lift(den, K) * P.x();
    std::vector<Point> out;
    for (const FieldElement& x : roots_in_field(h, K)) {
        for (Point& Q : points_with_x(E, K, x)) {
            if (Q + Q == P) out.push_back(std::move(Q));
        }
    }
    detail::sort_points(out);
    return out;
}

/// Halving through the square criterion on y'² = (x − e1)(x − e2)(x − e3), where
/// y' = y + (a1x + a3)/2: P is in 2E(K) iff every x_P − e_i is a square in K, and
/// then the halves have x-coordinate x_P + ε12 r1r2 + ε13 r1r3 + ε23 r2r3 with
/// r_i = √(x_P − e_i) and sign patterns (+,+,+), (+,−,−), (−,+,−), (−,−,+).
/// Absent when the 2-division cubic does not split over K.
inline std::optional<std::vector<Point>> knapp_two_preimages(const Curve& E, const Point& P, const NumberField& K) {
    if (P.is_infinity()) return two_torsion_points(E, K);
    auto e = roots_in_field(E.two_division(), K);
    if (e.size() != 3) return std::nullopt;
    std::vector<Point> out;
    std::array<FieldElement, 3> r;
    for (std::size_t i = 0; i < 3; ++i) {
        auto s = sqrt_in_field(P.x() - e[i]);
        if (!s) return out;
        r[i] = *s;
    }
    static constexpr int kSigns[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    for (const auto& sg : kSigns) {
        FieldElement xq = P.x() + r[0] * r[1] * Rational(sg[0]) + r[0] * r[2] * Rational(sg[1]) + r[1] * r[2] * Rational(sg[2]);
        for (Point& Q : points_with_x(E, K, xq)) {
            if (Q + Q == P) out.push_back(std::move(Q));
        }
    }
    detail::sort_points(out);
    return out;
}

}  // namespace qtors

#endif  // QTORS_ELLCURVE_HALVING_HPP
