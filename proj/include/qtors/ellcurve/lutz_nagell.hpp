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

#ifndef QTORS_ELLCURVE_LUTZ_NAGELL_HPP
#define QTORS_ELLCURVE_LUTZ_NAGELL_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "qtors/ellcurve/curve.hpp"
#include "qtors/ellcurve/group.hpp"
#include "qtors/torsion/structure.hpp"

namespace qtors {

struct RationalTorsion {
    TorsionStructure structure;
    std::vector<Point> points;      // all of E(ℚ)_tors on the input model, canonical order
    std::vector<Point> generators;
};

namespace detail {

// Integer roots of x³ + a x + c, exact bisection on the three monotone pieces.
inline std::vector<Integer> integer_cubic_roots(const Integer& a, const Integer& c) {
    auto g = [&](const Integer& x) { return Integer(x * x * x + a * x + c); };
    const Integer R = 1 + std::max(abs(a), abs(c));
    std::vector<Integer> out;
    auto search = [&](Integer lo, Integer hi, bool increasing) {
        if (lo > hi) return;
        Integer glo = g(lo), ghi = g(hi);
        if (!increasing) {
            glo = -glo;
            ghi = -ghi;
        }
        if (glo > 0 || ghi < 0) return;
        while (lo < hi) {
            Integer mid = lo + (hi - lo) / 2;
            Integer v = g(mid);
            if (!increasing) v = -v;
            if (v >= 0) hi = mid;
            else lo = mid + 1;
        }
        if (g(lo) == 0) out.push_back(lo);
    };
    Integer t = -1;  // floor of √(−a/3) when a < 0
    if (a < 0) t = isqrt(Integer(-a / 3));
    if (t < 0) {
        search(-R, R, true);
    } else {
        search(-R, -t - 1, true);
        search(-t, t, false);
        search(t + 1, R, true);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline void square_divisor_roots(const std::vector<std::pair<Integer, unsigned>>& fac, std::size_t i, const Integer& acc,
                                 std::vector<Integer>& out) {
    if (i == fac.size()) {
        out.push_back(acc);
        return;
    }
    Integer m = acc;
    for (unsigned e = 0; 2 * e <= fac[i].second; ++e) {
        square_divisor_roots(fac, i + 1, m, out);
        m *= fac[i].first;
    }
}

}  // namespace detail

/// E(ℚ)_tors by Lutz–Nagell on the integral model Y² = X³ − 27c4u⁴X − 54c6u⁶: torsion
/// points are integral with Y = 0 or Y² | 4A³ + 27B², and have order at most 12.
inline RationalTorsion lutz_nagell_torsion(const Curve& E) {
    const Rational A = -27 * E.c4(), B = -54 * E.c6();
    const Integer u = lcm(Integer(A.get_den()), Integer(B.get_den()));
    const Integer Ai = Integer(A.get_num()) * (pow(u, 4) / Integer(A.get_den()));
    const Integer Bi = Integer(B.get_num()) * (pow(u, 6) / Integer(B.get_den()));
    const Integer D = 4 * Ai * Ai * Ai + 27 * Bi * Bi;
    if (D == 0) throw SingularCurveError("singular integral model");

    std::vector<Integer> ys;
    detail::square_divisor_roots(factor_integer(abs(D)), 0, Integer(1), ys);
    ys.push_back(Integer(0));

    const NumberField Q = NumberField::rationals();
    const Curve S(0, 0, 0, Rational(Ai), Rational(Bi));
    // Back to the input model: X = u²(36x + 3b2), Y = 108u³(2y + a1x + a3).
    const Rational u2(u * u), u3(u * u * u);
    std::vector<Point> torsion{Point::infinity(E, Q)};
    for (const Integer& y : ys) {
        for (const Integer& x : detail::integer_cubic_roots(Ai, Integer(Bi - y * y))) {
            for (int sign : {1, -1}) {
                if (sign == -1 && y == 0) continue;
                Point P(S, Q, Q.from_rational(Rational(x)), Q.from_rational(Rational(sign * y)));
                if (!order_bounded(P, 12)) continue;
                Rational X = Rational(x) / u2, Y = Rational(sign * y) / u3;
                Rational xe = (X - 3 * E.b2()) / 36;
                Rational ye = (Y / 108 - E.a1() * xe - E.a3()) / 2;
                torsion.emplace_back(E, Q, Q.from_rational(xe), Q.from_rational(ye));
            }
        }
    }
    std::sort(torsion.begin(), torsion.end(), point_less);
    torsion.erase(std::unique(torsion.begin(), torsion.end()), torsion.end());

    std::vector<unsigned long> orders;
    unsigned long exponent = 1;
    for (const Point& P : torsion) {
        auto ord = order_bounded(P, 12);
        if (!ord) throw InvariantViolation("Lutz-Nagell point of unbounded order");
        orders.push_back(*ord);
        exponent = std::lcm(exponent, static_cast<unsigned long>(*ord));
    }
    std::map<unsigned long, unsigned long> counts;
    for (unsigned long n = 1; n <= exponent; ++n) {
        if (exponent % n != 0) continue;
        counts[n] = static_cast<unsigned long>(std::count_if(orders.begin(), orders.end(), [n](unsigned long o) { return n % o == 0; }));
    }
    RationalTorsion out{structure_from_counts(counts), torsion, {}};
    out.generators = choose_generators(torsion, out.structure);
    return out;
}

}  // namespace qtors

#endif  // QTORS_ELLCURVE_LUTZ_NAGELL_HPP
