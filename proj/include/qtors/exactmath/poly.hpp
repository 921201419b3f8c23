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

#ifndef QTORS_EXACTMATH_POLY_HPP
#define QTORS_EXACTMATH_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtors/error.hpp"
#include "qtors/exactmath/rational.hpp"

namespace qtors {

// Dense univariate polynomial over a field-like coefficient type T.
//
// T must provide +, -, *, / and the free functions is_zero(T), zero_like(T),
// one_like(T). Coefficients are stored constant term first with no trailing
// zeros, so the zero polynomial has no coefficients and no degree.
template <class T>
class Poly {
   public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    /// x^k scaled by v.
    static Poly monomial(const T& v, std::size_t k) {
        std::vector<T> c(k + 1, zero_like(v));
        c[k] = v;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Degree, absent for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    /// Degree of a polynomial known to be nonzero.
    std::size_t deg() const {
        if (c_.empty()) throw DomainError("degree of the zero polynomial");
        return c_.size() - 1;
    }

    std::size_t size() const { return c_.size(); }
    const std::vector<T>& coeffs() const { return c_; }
    const T& operator[](std::size_t i) const { return c_[i]; }
    /// Coefficient of x^i, zero beyond the degree. Needs a nonzero polynomial to supply the zero.
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_like(c_.front()); }
    const T& lead() const {
        if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
        return c_.back();
    }

    T operator()(const T& x) const {
        if (c_.empty()) return zero_like(x);
        T acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Horner evaluation at a value of a different ring (e.g. rational poly at a field element).
    template <class U>
    U eval_at(const U& x) const {
        U acc = zero_like(x);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly operator-() const {
        std::vector<T> c = c_;
        for (T& v : c) v = -v;
        return Poly(std::move(c));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_like(o.c_.front()));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_like(o.c_.front()));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const T& s) {
        if (is_zero_value(s)) {
            c_.clear();
            return *this;
        }
        for (T& v : c_) v = v * s;
        trim();
        return *this;
    }
    Poly& operator/=(const T& s) {
        if (is_zero_value(s)) throw DivisionByZero("polynomial divided by zero scalar");
        for (T& v : c_) v = v / s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }
    friend Poly operator/(Poly a, const T& s) { return a /= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, zero_like(a.c_.front()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero_value(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder; divisor nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        if (a.c_.size() < b.c_.size()) return {Poly{}, a};
        std::vector<T> r = a.c_;
        std::vector<T> q(a.c_.size() - b.c_.size() + 1, zero_like(a.c_.front()));
        const T inv_lead = one_like(b.c_.back()) / b.c_.back();
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t k = q.size(); k-- > 0;) {
            const T& top = r[k + db];
            if (is_zero_value(top)) continue;
            T f = top * inv_lead;
            for (std::size_t j = 0; j <= db; ++j) r[k + j] = r[k + j] - f * b.c_[j];
            q[k] = f;
        }
        r.resize(db);
        return {Poly(std::move(q)), Poly(std::move(r))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> d;
        d.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
        return Poly(std::move(d));
    }

    Poly monic() const {
        if (c_.empty()) return {};
        return *this / c_.back();
    }

    /// p(x + shift).
    Poly taylor_shift(const T& shift) const {
        if (c_.empty()) return {};
        Poly lin{shift, one_like(shift)};
        Poly acc = Poly::constant(c_.back());
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * lin + Poly::constant(c_[i]);
        return acc;
    }

   private:
    static bool is_zero_value(const T& v) {
        using qtors::is_zero;
        return is_zero(v);
    }
    void trim() {
        while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

using RatPoly = Poly<Rational>;

template <class T>
Poly<T> pow(Poly<T> base, unsigned e) {
    Poly<T> acc;
    bool have = false;
    while (e) {
        if (e & 1u) {
            acc = have ? acc * base : base;
            have = true;
        }
        e >>= 1;
        if (e) base = base * base;
    }
    if (!have) throw DomainError("pow(Poly, 0) needs a coefficient to build the unit");
    return acc;
}

/// The identity polynomial x over ℚ.
inline RatPoly ratpoly_x() { return RatPoly{Rational(0), Rational(1)}; }

/// Comma-separated coefficients, constant term first: "5,0,-10,0,1".
inline RatPoly parse_ratpoly(std::string_view text) {
    std::vector<Rational> c;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        c.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return RatPoly(std::move(c));
}

inline std::string format_ratpoly(const RatPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += to_string(p[i]);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << '[' << format_ratpoly(p) << ']'; }

/// Least common multiple of the coefficient denominators.
inline Integer denominator_lcm(const RatPoly& p) {
    Integer l = 1;
    for (const Rational& c : p.coeffs()) l = lcm(l, c.get_den());
    return l;
}

/// Primitive integer polynomial associated to p (positive leading coefficient), as integers.
inline std::vector<Integer> primitive_integer_part(const RatPoly& p) {
    if (p.is_zero()) return {};
    Integer l = denominator_lcm(p);
    std::vector<Integer> z;
    z.reserve(p.size());
    Integer g = 0;
    for (const Rational& c : p.coeffs()) {
        Rational scaled = c * l;
        z.push_back(scaled.get_num());
        g = gcd(g, z.back());
    }
    if (sgn(z.back()) < 0) g = -g;
    for (Integer& v : z) v /= g;
    return z;
}

inline RatPoly from_integers(const std::vector<Integer>& z) {
    std::vector<Rational> c;
    c.reserve(z.size());
    for (const Integer& v : z) c.emplace_back(v);
    return RatPoly(std::move(c));
}

}  // namespace qtors

#endif  // QTORS_EXACTMATH_POLY_HPP
