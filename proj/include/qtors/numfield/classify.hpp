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

#ifndef QTORS_NUMFIELD_CLASSIFY_HPP
#define QTORS_NUMFIELD_CLASSIFY_HPP

#include <algorithm>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "qtors/error.hpp"
#include "qtors/exactmath/factor.hpp"
#include "qtors/numfield/field.hpp"
#include "qtors/numfield/roots.hpp"

namespace qtors {

namespace detail {

inline GaloisType compute_galois_type(const NumberField& K) {
    switch (K.degree()) {
        case 1: return GaloisType::Rational;
        case 2: return GaloisType::Quadratic;
        default: break;
    }
    const RatPoly& f = K.defining_poly();
    if (roots_in_field(f, K).size() != 4) return GaloisType::NonGaloisQuartic;
    // A Galois quartic has group inside A4 exactly when the discriminant is a square.
    return is_rational_square(discriminant(f)) ? GaloisType::Biquadratic : GaloisType::CyclicQuartic;
}

}  // namespace detail

/// Galois type of K; computed once per field and cached.
inline GaloisType galois_type(const NumberField& K) {
    const auto& d = *K.data();
    std::call_once(d.galois_once, [&] { d.galois = detail::compute_galois_type(K); });
    return d.galois;
}

/// Resolvent cubic y³ − b y² + (ac − 4d) y − (a²d − 4bd + c²) of x⁴ + ax³ + bx² + cx + d.
inline RatPoly resolvent_cubic(const RatPoly& f) {
    if (f.is_zero() || f.deg() != 4) throw DomainError("resolvent cubic needs a quartic");
    RatPoly g = f.monic();
    const Rational a = g[3], b = g[2], c = g[1], d = g[0];
    return RatPoly{Rational(-(a * a * d - 4 * b * d + c * c)), Rational(a * c - 4 * d), Rational(-b), Rational(1)};
}

/// Squarefree integers m with ℚ(√m) ⊆ K, ascending. For a quadratic K this is its own m.
inline std::vector<Integer> quadratic_subfields(const NumberField& K) {
    const auto& data = *K.data();
    std::call_once(data.subfields_once, [&] {
        std::vector<Integer> out;
        const RatPoly& f = K.defining_poly();
        if (K.degree() == 2) {
            out.push_back(squarefree_part(Rational(f[1] * f[1] - 4 * f[0])));
        } else if (K.degree() == 4) {
            const Rational a = f[3], b = f[2], d = f[0];
            for (const Rational& rho : rational_roots(resolvent_cubic(f))) {
                // (x1 + x2 − x3 − x4)² and (x1x2 − x3x4)² for the pairing fixed by rho.
                Rational delta = a * a - 4 * b + 4 * rho;
                if (sgn(delta) == 0 || is_rational_square(delta)) delta = rho * rho - 4 * d;
                if (sgn(delta) == 0 || is_rational_square(delta)) continue;
                Integer m = squarefree_part(delta);
                if (sqrt_in_field(K.from_rational(Rational(m)))) out.push_back(m);
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        }
        data.subfields = std::move(out);
    });
    return data.subfields;
}

/// √m as an element of K, if present.
inline std::optional<FieldElement> sqrt_of_rational(const Rational& m, const NumberField& K) {
    return sqrt_in_field(K.from_rational(m));
}

/// Whether z lies in ℚ + ℚ·s.
inline bool in_span_one(const FieldElement& z, const FieldElement& s) {
    std::optional<Rational> v;
    for (std::size_t i = 1; i < s.degree(); ++i) {
        if (sgn(s.coeffs()[i]) != 0) {
            v = z.coeffs()[i] / s.coeffs()[i];
            break;
        }
    }
    if (!v) return z.is_rational();
    FieldElement rest = z - s * *v;
    return rest.is_rational();
}

/// Degree over ℚ of the smallest subfield of K (among ℚ, its quadratic subfields, K)
/// containing every element of coords.
inline std::size_t definition_degree(const std::vector<FieldElement>& coords, const NumberField& K) {
    bool all_rational = std::all_of(coords.begin(), coords.end(), [](const FieldElement& z) { return z.is_rational(); });
    if (all_rational) return 1;
    if (K.degree() == 2) return 2;
    for (const Integer& m : quadratic_subfields(K)) {
        auto s = sqrt_of_rational(Rational(m), K);
        if (!s) throw InvariantViolation("quadratic subfield generator missing");
        if (std::all_of(coords.begin(), coords.end(), [&](const FieldElement& z) { return in_span_one(z, *s); })) return 2;
    }
    return K.degree();
}

/// Classifies K = ℚ(√(a + b√m)) and returns it with defining polynomial x⁴ − 2a x² + (a² − b²m)
/// (for b = 0, the polynomial of √m + √a instead).
///
/// With N = a² − m b² the norm of α = a + b√m: K is cyclic when N/m is a nonzero
/// rational square, biquadratic when N itself is a square (this covers b = 0), and
/// not Galois otherwise (this covers a = 0 apart from m = −1).
inline std::pair<GaloisType, NumberField> cyclic_criterion(const Rational& m, const Rational& a, const Rational& b) {
    if (sgn(m) == 0 || is_rational_square(m)) throw DomainError("m must not be a rational square");
    if (sgn(b) == 0) {
        // x⁴ − 2a x² + a² = (x² − a)² defines nothing; K = ℚ(√m, √a) is generated by √m + √a.
        if (sgn(a) == 0 || is_rational_square(a) || is_rational_square(Rational(a * m)))
            throw DomainError("a + b√m is a square in ℚ(√m); the tower is not quartic");
        Rational d = m - a;
        return {GaloisType::Biquadratic,
                NumberField(RatPoly{Rational(d * d), Rational(0), Rational(-2 * (m + a)), Rational(0), Rational(1)})};
    }
    RatPoly g{Rational(a * a - b * b * m), Rational(0), Rational(-2 * a), Rational(0), Rational(1)};
    if (!factor_bounded(g, 2).empty())
        throw DomainError("a + b√m is a square in ℚ(√m); the tower is not quartic");
    NumberField K(g);
    const Rational N = a * a - m * b * b;
    GaloisType t = GaloisType::NonGaloisQuartic;
    if (sgn(N) != 0 && is_rational_square(Rational(N / m))) t = GaloisType::CyclicQuartic;
    else if (is_rational_square(N)) t = GaloisType::Biquadratic;
    return {t, K};
}

}  // namespace qtors

#endif  // QTORS_NUMFIELD_CLASSIFY_HPP
