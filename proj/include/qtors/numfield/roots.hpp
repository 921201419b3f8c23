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

#ifndef QTORS_NUMFIELD_ROOTS_HPP
#define QTORS_NUMFIELD_ROOTS_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "qtors/error.hpp"
#include "qtors/exactmath/factor.hpp"
#include "qtors/exactmath/modp.hpp"
#include "qtors/numfield/field.hpp"

namespace qtors {

/// Monic gcd in K[x]; gcd(0, 0) = 0.
inline KPoly kpoly_gcd(KPoly a, KPoly b) {
    while (!b.is_zero()) {
        KPoly r = a % b;
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.monic();
}

namespace detail {

inline RatPoly poly_det(const std::vector<std::vector<RatPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    RatPoly acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<RatPoly>> minor(n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor[r - 1].push_back(m[r][c]);
        RatPoly term = m[0][j] * poly_det(minor);
        if (j % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

inline void sort_unique(std::vector<FieldElement>& v) {
    std::sort(v.begin(), v.end(), [](const FieldElement& a, const FieldElement& b) { return lex_less(a, b); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

/// N(x) = N_{K(x)/ℚ(x)}(h) = Res_θ(f(θ), h(x, θ)), a ℚ-polynomial of degree n·deg h.
inline RatPoly norm_poly(const KPoly& h) {
    if (h.is_zero()) return {};
    const std::size_t n = h[0].degree();
    std::vector<std::vector<std::vector<Rational>>> mats;
    for (std::size_t k = 0; k < h.size(); ++k) mats.push_back(multiplication_matrix(h[k]));
    std::vector<std::vector<RatPoly>> m(n, std::vector<RatPoly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> c(h.size());
            for (std::size_t k = 0; k < h.size(); ++k) c[k] = mats[k][i][j];
            m[i][j] = RatPoly(std::move(c));
        }
    }
    return detail::poly_det(m);
}

namespace detail {

// Roots in K of a squarefree h of positive degree (Trager).
inline std::vector<FieldElement> trager_roots(const KPoly& h, const NumberField& K) {
    const unsigned n = static_cast<unsigned>(K.degree());
    std::vector<FieldElement> roots;
    if (h.deg() == 1) {
        roots.push_back(-(h[0] / h[1]));
        return roots;
    }
    const FieldElement theta = K.theta();
    for (long s = 0; s <= 64; ++s) {
        KPoly hs = s == 0 ? h : h.taylor_shift(theta * Rational(-s));
        RatPoly N = norm_poly(hs);
        if (!poly_gcd(N, N.derivative()).is_constant()) continue;
        for (const Factor& fac : factor_bounded(N, n)) {
            if (fac.poly.deg() != n) continue;
            KPoly g = kpoly_gcd(hs, lift(fac.poly, K));
            if (g.is_zero() || g.deg() != 1) throw InvariantViolation("norm factor does not give a linear factor");
            roots.push_back(-g[0] + theta * Rational(-s));
        }
        return roots;
    }
    throw InvariantViolation("no squarefree norm shift found");
}

inline std::optional<std::uint64_t> reduce_rational(const modp::Field& F, const Rational& q) {
    std::uint64_t den = F.reduce(q.get_den());
    if (den == 0) return std::nullopt;
    return F.mul(F.reduce(q.get_num()), F.inv(den));
}

// Sufficient test for h (monic) having no root in K. For a prime l not dividing disc(f)
// or any denominator and a root r of f mod l, θ ↦ r maps Z_(l)[θ] onto F_l; a root of h
// in K is integral over Z_(l), hence lies in Z_(l)[θ] and reduces to a root of h mod l.
inline bool modular_root_obstruction(const KPoly& h, const NumberField& K, std::size_t tries = 24) {
    static const std::vector<std::uint64_t> primes = modp::primes_above_1000(48);
    const RatPoly& f = K.defining_poly();
    const Rational disc = discriminant(f);
    std::size_t tested = 0;
    for (std::uint64_t l : primes) {
        modp::Field F{l};
        if (F.reduce(disc.get_num()) == 0) continue;
        std::vector<std::uint64_t> fbar;
        bool ok = true;
        for (std::size_t i = 0; i < f.size() && ok; ++i) {
            auto c = reduce_rational(F, f[i]);
            ok = c.has_value();
            if (ok) fbar.push_back(*c);
        }
        if (!ok) continue;
        for (std::uint64_t r = 0; r < l && tested < tries; ++r) {
            std::uint64_t v = 0;
            for (std::size_t i = fbar.size(); i-- > 0;) v = F.add(F.mul(v, r), fbar[i]);
            if (v != 0) continue;
            std::vector<std::uint64_t> rpow{1};
            for (std::size_t i = 1; i < f.size(); ++i) rpow.push_back(F.mul(rpow.back(), r));
            modp::Poly hbar;
            for (std::size_t k = 0; k < h.size() && ok; ++k) {
                std::uint64_t acc = 0;
                const auto& c = h[k].coeffs();
                for (std::size_t i = 0; i < c.size() && ok; ++i) {
                    auto ci = reduce_rational(F, c[i]);
                    ok = ci.has_value();
                    if (ok) acc = F.add(acc, F.mul(*ci, rpow[i]));
                }
                hbar.push_back(acc);
            }
            if (!ok) break;
            modp::trim(hbar);
            ++tested;
            modp::Poly xl = modp::powmod(F, modp::Poly{0, 1}, Integer(static_cast<unsigned long>(l)), hbar);
            xl = modp::sub(F, xl, modp::Poly{0, 1});
            if (modp::gcd(F, xl, hbar).size() <= 1) return true;
        }
        if (tested >= tries) break;
    }
    return false;
}

}  // namespace detail

/// The distinct roots of h lying in K, each verified by substitution, in canonical order.
inline std::vector<FieldElement> roots_in_field(const KPoly& h, const NumberField& K) {
    if (h.is_zero()) throw DomainError("roots_in_field of the zero polynomial");
    std::vector<FieldElement> roots;
    if (h.is_constant()) return roots;
    if (auto q = rational_coefficients(h)) {
        for (const Factor& fac : factor_bounded(*q, static_cast<unsigned>(K.degree()))) {
            const std::size_t d = fac.poly.deg();
            if (d == 1) {
                roots.push_back(K.from_rational(-fac.poly[0]));
            } else if (K.degree() % d == 0) {
                for (FieldElement& r : detail::trager_roots(lift(fac.poly, K), K)) roots.push_back(std::move(r));
            }
        }
    } else {
        KPoly hm = h.monic();
        if (hm.deg() > 1 && detail::modular_root_obstruction(hm, K)) return roots;
        KPoly g = kpoly_gcd(hm, hm.derivative());
        roots = detail::trager_roots(g.is_constant() ? hm : (hm / g).monic(), K);
    }
    for (const FieldElement& r : roots)
        if (!h(r).is_zero()) throw InvariantViolation("root substitution check failed");
    detail::sort_unique(roots);
    return roots;
}

inline std::vector<FieldElement> roots_in_field(const RatPoly& h, const NumberField& K) {
    return roots_in_field(lift(h, K), K);
}

/// Canonical sign: the first nonzero coordinate is positive.
inline FieldElement canonical_sign(const FieldElement& g) {
    for (const Rational& c : g.coeffs()) {
        if (sgn(c) != 0) return sgn(c) > 0 ? g : -g;
    }
    return g;
}

/// A square root of beta in its field, if one exists; the root with positive leading
/// nonzero coordinate is returned.
inline std::optional<FieldElement> sqrt_in_field(const FieldElement& beta) {
    if (beta.is_zero()) return beta;
    const NumberField K = beta.field_ref();
    if (beta.is_rational()) {
        if (auto r = rational_sqrt(beta.rational_part())) return K.from_rational(*r);
        if (K.degree() == 1) return std::nullopt;
    }
    // A square has a square norm.
    if (!is_rational_square(norm(beta))) return std::nullopt;
    KPoly h{-beta, zero_like(beta), one_like(beta)};
    auto roots = roots_in_field(h, K);
    if (roots.empty()) return std::nullopt;
    FieldElement g = canonical_sign(roots.front());
    if (!(g * g == beta)) throw InvariantViolation("square root check failed");
    return g;
}

inline std::optional<FieldElement> sqrt_in_field(const Rational& beta, const NumberField& K) {
    return sqrt_in_field(K.from_rational(beta));
}

}  // namespace qtors

#endif  // QTORS_NUMFIELD_ROOTS_HPP
