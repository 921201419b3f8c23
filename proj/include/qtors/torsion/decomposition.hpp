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

#ifndef QTORS_TORSION_DECOMPOSITION_HPP
#define QTORS_TORSION_DECOMPOSITION_HPP

#include <cstddef>

#include "qtors/ellcurve/divpoly.hpp"
#include "qtors/ellcurve/twist.hpp"
#include "qtors/error.hpp"
#include "qtors/numfield/classify.hpp"
#include "qtors/numfield/roots.hpp"
#include "qtors/numfield/spec.hpp"

namespace qtors {

/// #E(F)[n] for E: y² = x³ + Ax + B with A, B ∈ F and n odd, counted from the F-roots of ψ_n.
inline std::size_t odd_torsion_count(const FieldElement& A, const FieldElement& B, long n, const NumberField& F) {
    if (n < 1 || n % 2 == 0) throw DomainError("odd_torsion_count needs odd n");
    if (n == 1) return 1;
    const FieldElement zero = F.zero();
    DivisionPolynomials<FieldElement> D(zero, A * 2L, B * 4L, -(A * A));
    std::size_t count = 1;
    for (const FieldElement& x : roots_in_field(D.f(n), F)) {
        FieldElement rhs = (x * x + A) * x + B;
        if (rhs.is_zero()) throw InvariantViolation("a point of odd order has y = 0");
        if (sqrt_in_field(rhs)) count += 2;
    }
    return count;
}

/// K = F(√α) as an absolute field; α must not be a square in F, and F has degree 1 or 2.
inline NumberField adjoin_square_root(const NumberField& F, const FieldElement& alpha) {
    if (F.degree() > 2) throw DomainError("base field must have degree at most 2");
    if (sqrt_in_field(alpha)) throw DomainError("alpha is a square in the base field");
    if (F.degree() == 1) return quadratic_field(alpha.rational_part());
    if (alpha.is_rational()) return biquadratic_field(Rational(quadratic_subfields(F).front()), alpha.rational_part());
    KPoly g{-alpha, F.zero(), F.one()};
    return NumberField(monic_integral_normalization(norm_poly(g)));
}

/// Checks #E(K)[n] = #E(F)[n]·#E^α(F)[n] for K = F(√α) and odd n, computing all three
/// counts independently. E^α: y² = x³ + α²A x + α³B over F.
inline bool twist_decomposition_check(const Curve& E, const NumberField& F, const FieldElement& alpha, long n) {
    if (n < 1 || n % 2 == 0) throw DomainError("twist decomposition needs odd n");
    if (n == 1) return true;
    NumberField K = adjoin_square_root(F, alpha);
    auto [A, B] = short_form(E);
    std::size_t over_k = odd_torsion_count(K.from_rational(A), K.from_rational(B), n, K);
    std::size_t over_f = odd_torsion_count(F.from_rational(A), F.from_rational(B), n, F);
    FieldElement a2 = alpha * alpha;
    std::size_t twisted = odd_torsion_count(a2 * A, a2 * alpha * B, n, F);
    return over_k == over_f * twisted;
}

}  // namespace qtors

#endif  // QTORS_TORSION_DECOMPOSITION_HPP
