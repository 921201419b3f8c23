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

#ifndef QTORS_ELLCURVE_CURVE_HPP
#define QTORS_ELLCURVE_CURVE_HPP

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtors/error.hpp"
#include "qtors/exactmath/poly.hpp"
#include "qtors/exactmath/rational.hpp"
#include "qtors/numfield/field.hpp"
#include "qtors/numfield/roots.hpp"
#include "qtors/numfield/spec.hpp"

namespace qtors {

/// y² + a1xy + a3y = x³ + a2x² + a4x + a6 over ℚ, nonsingular.
class Curve {
   public:
    struct Invariants {
        Rational a1, a2, a3, a4, a6;
        Rational b2, b4, b6, b8;
        Rational c4, c6, disc, j;
    };

    Curve(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4, const Rational& a6) {
        auto d = std::make_shared<Invariants>();
        d->a1 = a1;
        d->a2 = a2;
        d->a3 = a3;
        d->a4 = a4;
        d->a6 = a6;
        d->b2 = a1 * a1 + 4 * a2;
        d->b4 = 2 * a4 + a1 * a3;
        d->b6 = a3 * a3 + 4 * a6;
        d->b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        d->c4 = d->b2 * d->b2 - 24 * d->b4;
        d->c6 = -d->b2 * d->b2 * d->b2 + 36 * d->b2 * d->b4 - 216 * d->b6;
        d->disc = -d->b2 * d->b2 * d->b8 - 8 * d->b4 * d->b4 * d->b4 - 27 * d->b6 * d->b6 + 9 * d->b2 * d->b4 * d->b6;
        if (sgn(d->disc) == 0) throw SingularCurveError("curve discriminant is zero");
        d->j = d->c4 * d->c4 * d->c4 / d->disc;
        inv_ = std::move(d);
    }

    explicit Curve(const std::array<Rational, 5>& a) : Curve(a[0], a[1], a[2], a[3], a[4]) {}

    const Rational& a1() const { return inv_->a1; }
    const Rational& a2() const { return inv_->a2; }
    const Rational& a3() const { return inv_->a3; }
    const Rational& a4() const { return inv_->a4; }
    const Rational& a6() const { return inv_->a6; }
    const Rational& b2() const { return inv_->b2; }
    const Rational& b4() const { return inv_->b4; }
    const Rational& b6() const { return inv_->b6; }
    const Rational& b8() const { return inv_->b8; }
    const Rational& c4() const { return inv_->c4; }
    const Rational& c6() const { return inv_->c6; }
    const Rational& discriminant() const { return inv_->disc; }
    const Rational& j_invariant() const { return inv_->j; }

    std::array<Rational, 5> a_invariants() const { return {a1(), a2(), a3(), a4(), a6()}; }

    /// x³ + a2x² + a4x + a6.
    RatPoly rhs() const { return RatPoly{a6(), a4(), a2(), Rational(1)}; }
    /// ψ₂² = 4x³ + b2x² + 2b4x + b6.
    RatPoly two_division() const { return RatPoly{b6(), Rational(2 * b4()), b2(), Rational(4)}; }

    friend bool operator==(const Curve& a, const Curve& b) { return a.a_invariants() == b.a_invariants(); }

   private:
    std::shared_ptr<const Invariants> inv_;
};

/// (Δ, j).
inline std::pair<Rational, Rational> invariants_of(const Curve& E) { return {E.discriminant(), E.j_invariant()}; }

struct CurveSpec {
    Curve curve;
    std::optional<std::string> label;
};

/// Parses "a1,a2,a3,a4,a6[,label]".
inline CurveSpec parse_curve_spec(std::string_view text) {
    auto parts = detail::split(detail::trim(text), ',');
    if (parts.size() != 5 && parts.size() != 6) throw ParseError("curve spec needs 5 coefficients and an optional label");
    std::array<Rational, 5> a;
    for (std::size_t i = 0; i < 5; ++i) a[i] = parse_rational(detail::trim(parts[i]));
    std::optional<std::string> label;
    if (parts.size() == 6) {
        label = detail::trim(parts[5]);
        if (label->empty()) label.reset();
    }
    return {Curve(a), label};
}

inline std::string format_curve(const Curve& E) {
    std::string s;
    for (const Rational& a : E.a_invariants()) {
        if (!s.empty()) s += ',';
        s += to_string(a);
    }
    return s;
}

/// A point of E(K), affine or at infinity.
class Point {
   public:
    static Point infinity(const Curve& E, const NumberField& K) { return Point(E, K); }

    Point(const Curve& E, const NumberField& K, FieldElement x, FieldElement y) : E_(E), K_(K), xy_(std::in_place, std::move(x), std::move(y)) {
        if (!on_curve()) throw DomainError("point is not on the curve");
    }

    bool is_infinity() const { return !xy_.has_value(); }
    const FieldElement& x() const { return xy_->first; }
    const FieldElement& y() const { return xy_->second; }
    const Curve& curve() const { return E_; }
    const NumberField& field() const { return K_; }

    friend bool operator==(const Point& P, const Point& Q) { return P.xy_ == Q.xy_; }

    Point operator-() const {
        if (is_infinity()) return *this;
        Point r = *this;
        r.xy_->second = -y() - x() * E_.a1() - K_.from_rational(E_.a3());
        return r;
    }

    friend Point operator+(const Point& P, const Point& Q) {
        if (P.is_infinity()) return Q;
        if (Q.is_infinity()) return P;
        const Curve& E = P.E_;
        const NumberField& K = P.K_;
        const FieldElement &x1 = P.x(), &y1 = P.y(), &x2 = Q.x(), &y2 = Q.y();
        FieldElement lambda, nu;
        if (x1 == x2) {
            FieldElement s = y1 + y2 + x2 * E.a1() + E.a3();
            if (s.is_zero()) return infinity(E, K);
            FieldElement den = y1 * Rational(2) + x1 * E.a1() + E.a3();
            FieldElement xx = x1 * x1;
            lambda = (xx * Rational(3) + x1 * Rational(2 * E.a2()) + E.a4() - y1 * E.a1()) / den;
            nu = (-(xx * x1) + x1 * E.a4() + Rational(2 * E.a6()) - y1 * E.a3()) / den;
        } else {
            FieldElement dx = x2 - x1;
            lambda = (y2 - y1) / dx;
            nu = (y1 * x2 - y2 * x1) / dx;
        }
        FieldElement x3 = lambda * lambda + lambda * E.a1() - E.a2() - x1 - x2;
        FieldElement y3 = -(lambda + E.a1()) * x3 - nu - E.a3();
        Point R(E, K);
        R.xy_.emplace(std::move(x3), std::move(y3));
        return R;
    }
    friend Point operator-(const Point& P, const Point& Q) { return P + (-Q); }

    bool on_curve() const {
        if (is_infinity()) return true;
        const FieldElement &X = x(), &Y = y();
        FieldElement lhs = Y * Y + X * Y * E_.a1() + Y * E_.a3();
        FieldElement rhs = ((X + E_.a2()) * X + E_.a4()) * X + E_.a6();
        return lhs == rhs;
    }

   private:
    Point(const Curve& E, const NumberField& K) : E_(E), K_(K) {}

    Curve E_;
    NumberField K_;
    std::optional<std::pair<FieldElement, FieldElement>> xy_;
};

/// Canonical order: infinity first, then x, then y, lexicographic on coordinates.
inline bool point_less(const Point& P, const Point& Q) {
    if (P.is_infinity() || Q.is_infinity()) return P.is_infinity() && !Q.is_infinity();
    if (!(P.x() == Q.x())) return lex_less(P.x(), Q.x());
    return lex_less(P.y(), Q.y());
}

/// [n]P by double-and-add; negative n negates.
inline Point scalar_mul(const Point& P, long n) {
    if (n < 0) return scalar_mul(-P, -n);
    Point acc = Point::infinity(P.curve(), P.field());
    Point base = P;
    unsigned long k = static_cast<unsigned long>(n);
    while (k) {
        if (k & 1) acc = acc + base;
        k >>= 1;
        if (k) base = base + base;
    }
    return acc;
}

/// Order of P if it is at most bound.
inline std::optional<unsigned> order_bounded(const Point& P, unsigned bound) {
    Point Q = P;
    for (unsigned k = 1; k <= bound; ++k) {
        if (Q.is_infinity()) return k;
        Q = Q + P;
    }
    return std::nullopt;
}

/// All points of E(K) with the given x-coordinate, in canonical order.
inline std::vector<Point> points_with_x(const Curve& E, const NumberField& K, const FieldElement& x) {
    // y² + (a1x + a3)y − (x³ + a2x² + a4x + a6) = 0 has discriminant D.
    FieldElement lin = x * E.a1() + E.a3();
    FieldElement cub = ((x + E.a2()) * x + E.a4()) * x + E.a6();
    FieldElement D = lin * lin + cub * Rational(4);
    std::vector<Point> out;
    auto s = sqrt_in_field(D);
    if (!s) return out;
    FieldElement y1 = (-lin + *s) / Rational(2);
    out.emplace_back(E, K, x, y1);
    if (!s->is_zero()) out.emplace_back(E, K, x, (-lin - *s) / Rational(2));
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

}  // namespace qtors

#endif  // QTORS_ELLCURVE_CURVE_HPP
