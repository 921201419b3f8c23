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

#ifndef QTORS_ELLCURVE_DIVPOLY_HPP
#define QTORS_ELLCURVE_DIVPOLY_HPP

#include <map>
#include <utility>

#include "qtors/ellcurve/curve.hpp"
#include "qtors/exactmath/factor.hpp"
#include "qtors/exactmath/poly.hpp"

namespace qtors {

// Division polynomials in x alone over a coefficient ring T.
//
// f_n = ψ_n for odd n and f_n = ψ_n/ψ₂ for even n, where ψ₂² = F = 4x³ + b2x² + 2b4x + b6.
// The coefficient ring only needs to contain b2, b4, b6, b8, so the same code serves
// curves over ℚ and twists whose coefficients live in a number field.
template <class T>
class DivisionPolynomials {
   public:
    using P = Poly<T>;

    DivisionPolynomials(const T& b2, const T& b4, const T& b6, const T& b8) : b2_(b2), b4_(b4), b6_(b6), b8_(b8) {
        const T one = one_like(b2);
        F_ = P{b6, b4 * 2L, b2, one * 4L};
        F2_ = F_ * F_;
        cache_[1] = P::constant(one);
        cache_[2] = P::constant(one);
        cache_[3] = P{b8, b6 * 3L, b4 * 3L, b2, one * 3L};
        cache_[4] = P{b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, b8 * 10L, b6 * 10L, b4 * 5L, b2, one * 2L};
    }

    const P& two_division() const { return F_; }

    /// f_n, n >= 1.
    const P& f(long n) {
        if (n < 1) throw DomainError("division polynomial index must be positive");
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
        P out;
        const long k = n / 2;
        if (n % 2 == 1) {
            P a = f(k + 2) * cube(f(k));
            P b = f(k - 1) * cube(f(k + 1));
            out = (k % 2 == 0) ? F2_ * a - b : a - F2_ * b;
        } else {
            P inner = f(k + 2) * f(k - 1) * f(k - 1) - f(k - 2) * f(k + 1) * f(k + 1);
            out = f(k) * inner;
        }
        return cache_.emplace(n, std::move(out)).first->second;
    }

    /// ψ_n² as a polynomial in x.
    P psi_squared(long n) {
        const P& g = f(n);
        return n % 2 == 1 ? g * g : g * g * F_;
    }

    /// (φ_m, ψ_m²) with x([m]P) = φ_m(x)/ψ_m²(x).
    std::pair<P, P> mult_by_m_xmap(long m) {
        const T one = one_like(b2_);
        const P x{zero_like(b2_), one};
        if (m == 1) return {x, P::constant(one)};
        P prod = f(m + 1) * f(m - 1);
        if (m % 2 == 1) prod = prod * F_;
        P den = psi_squared(m);
        return {x * den - prod, den};
    }

   private:
    static P cube(const P& a) { return a * a * a; }

    T b2_, b4_, b6_, b8_;
    P F_, F2_;
    std::map<long, P> cache_;
};

inline DivisionPolynomials<Rational> division_polynomials(const Curve& E) {
    return DivisionPolynomials<Rational>(E.b2(), E.b4(), E.b6(), E.b8());
}

/// The y-free division polynomial f_n of E (ψ_n for odd n, ψ_n/ψ₂ for even n).
inline RatPoly division_polynomial(const Curve& E, long n) { return division_polynomials(E).f(n); }

/// (φ_m, ψ_m²) for E.
inline std::pair<RatPoly, RatPoly> mult_by_m_xmap(const Curve& E, long m) { return division_polynomials(E).mult_by_m_xmap(m); }

/// Polynomial whose roots are exactly the x-coordinates of points of exact order n (n >= 2).
inline RatPoly primitive_division_polynomial(const Curve& E, long n) {
    auto D = division_polynomials(E);
    if (n == 2) return D.two_division().monic();
    RatPoly g = D.f(n);
    for (long d = 2; d < n; ++d) {
        if (n % d != 0) continue;
        RatPoly sub = d == 2 ? D.two_division() : D.f(d);
        RatPoly c = poly_gcd(g, sub);
        if (!c.is_constant()) g = g / c;
    }
    return g.monic();
}

}  // namespace qtors

#endif  // QTORS_ELLCURVE_DIVPOLY_HPP
