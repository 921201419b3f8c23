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

#ifndef QTORS_NUMFIELD_FIELD_HPP
#define QTORS_NUMFIELD_FIELD_HPP

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtors/error.hpp"
#include "qtors/exactmath/factor.hpp"
#include "qtors/exactmath/poly.hpp"
#include "qtors/exactmath/rational.hpp"

namespace qtors {

enum class GaloisType { Rational, Quadratic, CyclicQuartic, Biquadratic, NonGaloisQuartic };

inline std::string_view to_string(GaloisType g) {
    switch (g) {
        case GaloisType::Rational: return "Rational";
        case GaloisType::Quadratic: return "Quadratic";
        case GaloisType::CyclicQuartic: return "CyclicQuartic";
        case GaloisType::Biquadratic: return "Biquadratic";
        case GaloisType::NonGaloisQuartic: return "NonGaloisQuartic";
    }
    return "?";
}

inline bool is_galois_quartic(GaloisType g) { return g == GaloisType::CyclicQuartic || g == GaloisType::Biquadratic; }

namespace detail {

struct FieldData {
    RatPoly f;
    std::size_t n = 0;
    // Power-basis coordinates of θ^(n+k), k = 0 .. n-2.
    std::vector<std::vector<Rational>> high_powers;

    mutable std::once_flag galois_once;
    mutable GaloisType galois = GaloisType::Rational;
    mutable std::once_flag subfields_once;
    mutable std::vector<Integer> subfields;
};

}  // namespace detail

class FieldElement;

/// ℚ[θ]/(f) for a monic irreducible f of degree 1, 2 or 4.
class NumberField {
   public:
    /// ℚ itself, presented as ℚ[θ]/(θ).
    NumberField() : NumberField(ratpoly_x()) {}

    explicit NumberField(const RatPoly& f) {
        if (f.is_zero()) throw DomainError("defining polynomial is zero");
        const std::size_t n = f.deg();
        if (n != 1 && n != 2 && n != 4) throw DomainError("field degree must be 1, 2 or 4");
        if (f.lead() != 1) throw DomainError("defining polynomial must be monic");
        if (n > 1 && !factor_bounded(f, static_cast<unsigned>(n / 2)).empty())
            throw DomainError("defining polynomial " + format_ratpoly(f) + " is reducible");
        auto d = std::make_shared<detail::FieldData>();
        d->f = f;
        d->n = n;
        // θ^n = -(f_0 + ... + f_{n-1} θ^{n-1}); higher powers by shifting.
        std::vector<Rational> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = -f[i];
        for (std::size_t k = 0; k + 1 < n; ++k) {
            d->high_powers.push_back(row);
            std::vector<Rational> next(n, Rational(0));
            for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] = row[i];
            for (std::size_t i = 0; i < n; ++i) next[i] -= row[n - 1] * f[i];
            row = std::move(next);
        }
        if (n == 1) d->galois = GaloisType::Rational;
        data_ = std::move(d);
    }

    static NumberField rationals() { return NumberField(); }

    const RatPoly& defining_poly() const { return data_->f; }
    std::size_t degree() const { return data_->n; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement theta() const;
    FieldElement from_rational(const Rational& r) const;
    FieldElement element(std::vector<Rational> coeffs) const;

    const std::shared_ptr<const detail::FieldData>& data() const { return data_; }

    friend bool operator==(const NumberField& a, const NumberField& b) {
        return a.data_ == b.data_ || a.data_->f == b.data_->f;
    }

   private:
    friend class FieldElement;
    explicit NumberField(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}

    std::shared_ptr<const detail::FieldData> data_;
};

/// Element of a NumberField as power-basis coordinates.
class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(std::shared_ptr<const detail::FieldData> k, std::vector<Rational> c) : k_(std::move(k)), c_(std::move(c)) {
        if (!k_) throw DomainError("field element without a field");
        if (c_.size() != k_->n) throw DomainError("coordinate count does not match field degree");
    }

    NumberField field_ref() const;
    const std::shared_ptr<const detail::FieldData>& data() const { return k_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    std::size_t degree() const { return c_.size(); }

    bool is_zero() const {
        for (const Rational& v : c_)
            if (sgn(v) != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return false;
        return true;
    }
    /// Constant coordinate; meaningful as a value only when is_rational().
    const Rational& rational_part() const { return c_.at(0); }

    FieldElement operator-() const {
        FieldElement r = *this;
        for (Rational& v : r.c_) v = -v;
        return r;
    }
    FieldElement& operator+=(const FieldElement& o) {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    FieldElement& operator-=(const FieldElement& o) {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    FieldElement& operator*=(const Rational& s) {
        for (Rational& v : c_) v *= s;
        return *this;
    }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator+(FieldElement a, const Rational& r) {
        a.c_.at(0) += r;
        return a;
    }
    friend FieldElement operator-(FieldElement a, const Rational& r) {
        a.c_.at(0) -= r;
        return a;
    }
    friend FieldElement operator*(FieldElement a, const Rational& s) { return a *= s; }
    friend FieldElement operator*(const Rational& s, FieldElement a) { return a *= s; }
    friend FieldElement operator*(FieldElement a, long s) { return a *= Rational(s); }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        const std::size_t n = a.c_.size();
        std::vector<Rational> wide(2 * n - 1, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(b.c_[j]) == 0) continue;
                wide[i + j] += a.c_[i] * b.c_[j];
            }
        }
        std::vector<Rational> out(wide.begin(), wide.begin() + static_cast<std::ptrdiff_t>(n));
        for (std::size_t k = n; k < wide.size(); ++k) {
            if (sgn(wide[k]) == 0) continue;
            const auto& row = a.k_->high_powers[k - n];
            for (std::size_t i = 0; i < n; ++i) out[i] += wide[k] * row[i];
        }
        return FieldElement(a.k_, std::move(out));
    }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    /// Inverse from the identity u·a + v·f = 1 in ℚ[x].
    FieldElement inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero field element");
        if (c_.size() == 1) return FieldElement(k_, {Rational(1) / c_[0]});
        RatPoly r0 = k_->f, r1{std::vector<Rational>(c_)};
        RatPoly s0, s1 = RatPoly::constant(Rational(1));
        while (!r1.is_constant()) {
            auto [q, r] = divmod(r0, r1);
            RatPoly s2 = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r1.is_zero()) throw InvariantViolation("defining polynomial shares a factor with an element");
        s1 /= r1[0];
        std::vector<Rational> out(c_.size(), Rational(0));
        for (std::size_t i = 0; i < s1.size(); ++i) out[i] = s1[i];
        return FieldElement(k_, std::move(out));
    }

    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
    friend FieldElement operator/(FieldElement a, const Rational& s) {
        if (sgn(s) == 0) throw DivisionByZero("field element divided by zero");
        for (Rational& v : a.c_) v /= s;
        return a;
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.c_ == b.c_; }

    /// Lexicographic order on coordinates, constant term first; used only for canonical ordering.
    friend bool lex_less(const FieldElement& a, const FieldElement& b) {
        for (std::size_t i = 0; i < a.c_.size() && i < b.c_.size(); ++i) {
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        }
        return a.c_.size() < b.c_.size();
    }

   private:
    void check_same(const FieldElement& o) const {
        if (k_ != o.k_ && (!k_ || !o.k_ || !(k_->f == o.k_->f)))
            throw DomainError("field elements from different fields");
    }

    std::shared_ptr<const detail::FieldData> k_;
    std::vector<Rational> c_;
};

inline bool is_zero(const FieldElement& a) { return a.is_zero(); }
inline FieldElement zero_like(const FieldElement& a) {
    return FieldElement(a.data(), std::vector<Rational>(a.degree(), Rational(0)));
}
inline FieldElement one_like(const FieldElement& a) {
    std::vector<Rational> c(a.degree(), Rational(0));
    c[0] = 1;
    return FieldElement(a.data(), std::move(c));
}

inline FieldElement NumberField::zero() const { return FieldElement(data_, std::vector<Rational>(data_->n, Rational(0))); }
inline FieldElement NumberField::one() const { return from_rational(Rational(1)); }
inline FieldElement NumberField::from_rational(const Rational& r) const {
    std::vector<Rational> c(data_->n, Rational(0));
    c[0] = r;
    return FieldElement(data_, std::move(c));
}
inline FieldElement NumberField::theta() const {
    if (data_->n == 1) return from_rational(-data_->f[0]);
    std::vector<Rational> c(data_->n, Rational(0));
    c[1] = 1;
    return FieldElement(data_, std::move(c));
}
inline FieldElement NumberField::element(std::vector<Rational> coeffs) const {
    return FieldElement(data_, std::move(coeffs));
}

inline NumberField FieldElement::field_ref() const {
    if (!k_) throw DomainError("field element without a field");
    return NumberField(k_);
}

inline std::string to_string(const FieldElement& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i) s += ',';
        s += to_string(a.coeffs()[i]);
    }
    return s + "]";
}

/// ℚ-linear multiplication-by-a matrix: column j holds the coordinates of a·θ^j.
inline std::vector<std::vector<Rational>> multiplication_matrix(const FieldElement& a) {
    const std::size_t n = a.degree();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    std::vector<Rational> e(n, Rational(0));
    e[0] = 1;
    FieldElement basis(a.data(), e);
    std::vector<Rational> t(n, Rational(0));
    if (n > 1) t[1] = 1;
    FieldElement th(a.data(), t);
    for (std::size_t j = 0; j < n; ++j) {
        FieldElement col = a * basis;
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coeffs()[i];
        if (n > 1) basis = basis * th;
    }
    return m;
}

namespace detail {

inline Rational det_rational(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && sgn(m[piv][c]) == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sgn(m[r][c]) == 0) continue;
            Rational k = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] -= k * m[c][j];
        }
    }
    return det;
}

}  // namespace detail

/// N_{K/ℚ}(a).
inline Rational norm(const FieldElement& a) { return detail::det_rational(multiplication_matrix(a)); }

using KPoly = Poly<FieldElement>;

inline KPoly lift(const RatPoly& h, const NumberField& K) {
    std::vector<FieldElement> c;
    c.reserve(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) c.push_back(K.from_rational(h[i]));
    return KPoly(std::move(c));
}

/// The ℚ-polynomial with the same coefficients, if every coefficient of h is rational.
inline std::optional<RatPoly> rational_coefficients(const KPoly& h) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (!h[i].is_rational()) return std::nullopt;
        c.push_back(h[i].rational_part());
    }
    return RatPoly(std::move(c));
}

}  // namespace qtors

#endif  // QTORS_NUMFIELD_FIELD_HPP
