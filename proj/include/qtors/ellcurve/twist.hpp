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

#ifndef QTORS_ELLCURVE_TWIST_HPP
#define QTORS_ELLCURVE_TWIST_HPP

#include <utility>

#include "qtors/ellcurve/curve.hpp"

namespace qtors {

/// (A, B) with E ≅ y² = x³ + Ax + B over ℚ: A = −c4/48, B = −c6/864.
inline std::pair<Rational, Rational> short_form(const Curve& E) {
    return {Rational(-E.c4() / 48), Rational(-E.c6() / 864)};
}

inline Curve short_curve(const Rational& A, const Rational& B) { return Curve(0, 0, 0, A, B); }

/// E^d: y² = x³ + d²A x + d³B on the short form of E.
inline Curve quadratic_twist(const Curve& E, const Rational& d) {
    if (sgn(d) == 0) throw DomainError("twist parameter must be nonzero");
    auto [A, B] = short_form(E);
    return short_curve(Rational(d * d * A), Rational(d * d * d * B));
}

}  // namespace qtors

#endif  // QTORS_ELLCURVE_TWIST_HPP
