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

#ifndef QTORS_EXACTMATH_FACTOR_HPP
#define QTORS_EXACTMATH_FACTOR_HPP

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "qtors/error.hpp"
#include "qtors/exactmath/modp.hpp"
#include "qtors/exactmath/poly.hpp"
#include "qtors/exactmath/rational.hpp"

namespace qtors {

/// Irreducible factor with multiplicity.
struct Factor {
    RatPoly poly;  // monic, irreducible over ℚ
    unsigned multiplicity;

    friend bool operator==(const Factor&, const Factor&) = default;
};

namespace detail {

using ZPoly = std::vector<Integer>;

inline void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Integer mod_pos(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Integer symmetric(const Integer& a, const Integer& m) {
    Integer r = mod_pos(a, m);
    if (2 * r > m) r -= m;
    return r;
}

inline ZPoly zmod(ZPoly a, const Integer& m) {
    for (Integer& v : a) v = mod_pos(v, m);
    ztrim(a);
    return a;
}

inline ZPoly zadd(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly c(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return zmod(std::move(c), m);
}

inline ZPoly zsub(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly c(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return zmod(std::move(c), m);
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return zmod(std::move(c), m);
}

inline ZPoly zscale(const ZPoly& a, const Integer& s, const Integer& m) {
    ZPoly c = a;
    for (Integer& v : c) v *= s;
    return zmod(std::move(c), m);
}

/// Division by a monic divisor modulo m.
inline std::pair<ZPoly, ZPoly> zdivmod_monic(const ZPoly& a, const ZPoly& b, const Integer& m) {
    if (a.size() < b.size()) return {ZPoly{}, a};
    ZPoly r = a;
    ZPoly q(a.size() - b.size() + 1, Integer(0));
    const std::size_t db = b.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
        Integer f = mod_pos(r[k + db], m);
        if (f == 0) continue;
        q[k] = f;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] = mod_pos(Integer(r[k + j] - f * b[j]), m);
    }
    r.resize(db);
    return {zmod(std::move(q), m), zmod(std::move(r), m)};
}

inline ZPoly from_modp(const modp::Poly& a) {
    ZPoly z;
    z.reserve(a.size());
    for (auto v : a) z.emplace_back(static_cast<unsigned long>(v));
    return z;
}

inline Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw DivisionByZero("no inverse mod m");
    return r;
}

/// Lifts f ≡ g·h (mod p), h monic, g and h coprime mod p, to f ≡ g*·h* (mod target or beyond).
/// Quadratic lifting; returns the modulus reached.
inline Integer hensel_lift(const ZPoly& f, ZPoly& g, ZPoly& h, std::uint64_t p, const Integer& target) {
    modp::Field F{p};
    auto [one, s0, t0] = modp::ext_gcd(F, modp::reduce(F, g), modp::reduce(F, h));
    if (one.size() != 1) throw InvariantViolation("hensel_lift: factors not coprime mod p");
    ZPoly s = from_modp(s0), t = from_modp(t0);
    Integer m(static_cast<unsigned long>(p));
    while (m <= target) {
        const Integer M = m * m;
        ZPoly e = zsub(zmod(f, M), zmul(g, h, M), M);
        auto [q, r] = zdivmod_monic(zmul(s, e, M), h, M);
        ZPoly g2 = zadd(zadd(g, zmul(t, e, M), M), zmul(q, g, M), M);
        ZPoly h2 = zadd(h, r, M);
        ZPoly b = zsub(zadd(zmul(s, g2, M), zmul(t, h2, M), M), ZPoly{Integer(1)}, M);
        auto [c, d] = zdivmod_monic(zmul(s, b, M), h2, M);
        s = zsub(s, d, M);
        t = zsub(zsub(t, zmul(t, b, M), M), zmul(c, g2, M), M);
        g = std::move(g2);
        h = std::move(h2);
        m = M;
    }
    return m;
}

inline std::vector<Integer> to_integer_coeffs(const RatPoly& p) { return primitive_integer_part(p); }

inline bool divides_exactly(const RatPoly& divisor, const RatPoly& dividend) {
    return (dividend % divisor).is_zero();
}

inline Integer norm2_bound(const ZPoly& f) {
    Integer s = 0;
    for (const Integer& c : f) s += c * c;
    return isqrt(s) + 1;
}

inline bool ratpoly_less(const RatPoly& a, const RatPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

// Factors of degree <= dmax of a primitive squarefree integer polynomial with f(0) != 0.
inline std::vector<RatPoly> bounded_factors_squarefree(ZPoly f, unsigned dmax) {
    std::vector<RatPoly> found;
    if (f.size() <= 1 || dmax == 0) return found;
    if (f.size() == 2) {
        found.push_back(from_integers(f).monic());
        return found;
    }
    const RatPoly fq = from_integers(f);

    // Sample several good primes: smallest primes above 1000 not dividing lc(f)
    // and keeping f squarefree. Keep the one with the fewest small factors and
    // intersect the achievable factor degrees across all of them.
    constexpr std::size_t kSamples = 5;
    std::bitset<64> allowed;
    allowed.set();
    std::uint64_t best_p = 0;
    modp::SmallFactorization best;
    std::size_t sampled = 0;
    for (std::uint64_t p : modp::primes_above_1000(400)) {
        if (sampled == kSamples) break;
        modp::Field F{p};
        if (F.reduce(f.back()) == 0) continue;
        modp::Poly fp = modp::monic(F, modp::reduce(F, f));
        if (!modp::is_squarefree(F, fp)) continue;
        ++sampled;
        modp::SmallFactorization sf = modp::small_factors(F, fp, dmax);
        std::bitset<64> sums;
        sums.set(0);
        for (const auto& u : sf.small) sums |= sums << (u.size() - 1);
        sums.reset(0);
        allowed &= sums;
        if (best_p == 0 || sf.small.size() < best.small.size()) {
            best_p = p;
            best = std::move(sf);
        }
    }
    if (best_p == 0) throw InvariantViolation("no good prime found for factorization");
    bool any = false;
    for (unsigned d = 1; d <= dmax; ++d) any = any || allowed.test(d);
    if (!any) return found;

    // Hensel lift the small factors (and the lumped remainder) to a modulus beyond
    // twice the coefficient bound of a degree <= dmax factor scaled by lc(f).
    const Integer lc = f.back();
    const Integer bound = 2 * abs(lc) * pow(Integer(2), dmax) * norm2_bound(f) + 1;
    const std::uint64_t p = best_p;
    modp::Field F{p};
    std::vector<modp::Poly> mod_factors = best.small;
    const bool has_rest = best.rest.size() > 1;
    if (has_rest) mod_factors.push_back(best.rest);

    std::vector<ZPoly> lifted(mod_factors.size());
    Integer modulus;
    {
        ZPoly current = f;
        for (std::size_t i = 0; i + 1 < mod_factors.size(); ++i) {
            modp::Poly others{F.reduce(lc)};
            for (std::size_t j = i + 1; j < mod_factors.size(); ++j) others = modp::mul(F, others, mod_factors[j]);
            ZPoly g = from_modp(others);
            ZPoly h = from_modp(mod_factors[i]);
            modulus = hensel_lift(current, g, h, p, bound);
            lifted[i] = h;
            current = g;
        }
        if (mod_factors.size() == 1) {
            Integer m(static_cast<unsigned long>(p));
            while (m <= bound) m *= m;
            modulus = m;
        }
        Integer inv = inverse_mod(current.back(), modulus);
        lifted.back() = zscale(current, inv, modulus);
    }

    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < best.small.size(); ++i) pool.push_back(i);
    ZPoly remaining = f;
    RatPoly remaining_q = fq;

    auto try_subset = [&](const std::vector<std::size_t>& subset) -> bool {
        const Integer lc_now = remaining.back();
        Integer const_term = lc_now;
        for (std::size_t i : subset) const_term = mod_pos(Integer(const_term * lifted[pool[i]][0]), modulus);
        const_term = symmetric(const_term, modulus);
        if (const_term == 0) return false;
        Integer target_const = lc_now * remaining[0];
        if (!mpz_divisible_p(target_const.get_mpz_t(), const_term.get_mpz_t())) return false;
        ZPoly cand{lc_now};
        for (std::size_t i : subset) cand = zmul(cand, lifted[pool[i]], modulus);
        for (Integer& v : cand) v = symmetric(v, modulus);
        ztrim(cand);
        RatPoly g = from_integers(cand);
        if (g.is_zero() || g.is_constant()) return false;
        auto [q, r] = divmod(remaining_q, g);
        if (!r.is_zero()) return false;
        found.push_back(g.monic());
        remaining_q = q;
        remaining = primitive_integer_part(q);
        return true;
    };

    for (unsigned k = 1; k <= dmax && k <= pool.size(); ++k) {
        bool restart = true;
        while (restart) {
            restart = false;
            std::vector<std::size_t> idx(k);
            for (unsigned i = 0; i < k; ++i) idx[i] = i;
            while (true) {
                std::size_t degsum = 0;
                for (std::size_t i : idx) degsum += mod_factors[pool[i]].size() - 1;
                if (degsum <= dmax && allowed.test(degsum) && try_subset(idx)) {
                    std::vector<std::size_t> next;
                    for (std::size_t i = 0; i < pool.size(); ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(pool[i]);
                    pool = std::move(next);
                    restart = k <= pool.size();
                    break;
                }
                // next combination
                std::size_t i = k;
                while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
                if (i == 0) break;
                ++idx[i - 1];
                for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return found;
}

}  // namespace detail

/// Monic greatest common divisor over ℚ; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
///
/// Multi-modular: images modulo primes above 1000 are combined by CRT until the
/// reconstruction stabilises and divides both inputs; a primitive Euclidean
/// sequence is the fallback.
inline RatPoly poly_gcd(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant()) return RatPoly::constant(Rational(1));
    using detail::ZPoly;
    const ZPoly A = primitive_integer_part(f);
    const ZPoly B = primitive_integer_part(g);
    const RatPoly Aq = from_integers(A), Bq = from_integers(B);
    const Integer lcg = gcd(A.back(), B.back());
    std::size_t best_deg = std::min(A.size(), B.size());
    ZPoly H;
    Integer M;
    RatPoly last;
    for (std::uint64_t p : modp::primes_above_1000(300)) {
        modp::Field F{p};
        if (F.reduce(A.back()) == 0 || F.reduce(B.back()) == 0) continue;
        modp::Poly gp = modp::gcd(F, modp::reduce(F, A), modp::reduce(F, B));
        std::size_t d = gp.size() - 1;
        if (d == 0) return RatPoly::constant(Rational(1));
        gp = modp::scale(F, gp, F.reduce(lcg));
        if (d < best_deg || H.empty()) {
            best_deg = d;
            H = detail::from_modp(gp);
            M = Integer(static_cast<unsigned long>(p));
            last = RatPoly{};
        } else if (d == best_deg) {
            Integer P(static_cast<unsigned long>(p));
            Integer inv = detail::inverse_mod(M % P, P);
            for (std::size_t i = 0; i < H.size(); ++i) {
                Integer hp = i < gp.size() ? Integer(static_cast<unsigned long>(gp[i])) : Integer(0);
                Integer delta = detail::mod_pos(Integer((hp - H[i]) * inv), P);
                H[i] += M * delta;
            }
            M *= P;
        } else {
            continue;
        }
        ZPoly sym = H;
        for (Integer& v : sym) v = detail::symmetric(v, M);
        detail::ztrim(sym);
        RatPoly cand = from_integers(sym);
        if (!cand.is_zero() && cand == last) {
            RatPoly prim = from_integers(primitive_integer_part(cand));
            if (detail::divides_exactly(prim, Aq) && detail::divides_exactly(prim, Bq)) return prim.monic();
        }
        last = cand;
    }
    RatPoly a = Aq, b = Bq;
    while (!b.is_zero()) {
        RatPoly r = a % b;
        a = std::move(b);
        b = r.is_zero() ? r : from_integers(primitive_integer_part(r));
    }
    return a.monic();
}

/// Monic product of the distinct irreducible factors of h.
inline RatPoly squarefree_part(const RatPoly& h) {
    if (h.is_zero()) throw DomainError("squarefree_part of zero");
    if (h.is_constant()) return RatPoly::constant(Rational(1));
    return (h / poly_gcd(h, h.derivative())).monic();
}

/// Yun's squarefree decomposition: h = c · ∏ a_i^i, returned as (a_i, i) with a_i monic nonconstant.
inline std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& h) {
    std::vector<std::pair<RatPoly, unsigned>> out;
    if (h.is_zero()) throw DomainError("squarefree_decomposition of zero");
    if (h.is_constant()) return out;
    RatPoly f = h.monic();
    RatPoly a = poly_gcd(f, f.derivative());
    RatPoly b = f / a;
    RatPoly c = f.derivative() / a;
    RatPoly d = c - b.derivative();
    unsigned i = 1;
    while (!b.is_constant()) {
        RatPoly g = poly_gcd(b, d);
        if (!g.is_constant()) out.emplace_back(g, i);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

/// Every monic irreducible factor of h over ℚ of degree <= dmax, with exact multiplicity.
/// Factors of higher degree are neither returned nor certified.
inline std::vector<Factor> factor_bounded(const RatPoly& h, unsigned dmax) {
    if (h.is_zero()) throw DomainError("factor_bounded of zero");
    std::vector<Factor> out;
    for (const auto& [part, mult] : squarefree_decomposition(h)) {
        RatPoly sq = part;
        // x | sq is peeled off so the constant-term test in recombination applies.
        if (is_zero(sq[0])) {
            if (dmax >= 1) out.push_back({ratpoly_x(), mult});
            sq = sq / ratpoly_x();
        }
        if (sq.is_constant()) continue;
        for (RatPoly& g : detail::bounded_factors_squarefree(primitive_integer_part(sq), dmax))
            out.push_back({std::move(g), mult});
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
        return detail::ratpoly_less(a.poly, b.poly);
    });
    return out;
}

/// The distinct rational roots of a nonzero h, ascending.
inline std::vector<Rational> rational_roots(const RatPoly& h) {
    if (h.is_zero()) throw DomainError("rational_roots of zero");
    std::vector<Rational> roots;
    for (const Factor& f : factor_bounded(h, 1)) roots.push_back(Rational(-f.poly[0]));
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Res(f, g) over ℚ via the Euclidean remainder sequence.
inline Rational resultant(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant with the zero polynomial");
    Rational acc = 1;
    RatPoly a = f, b = g;
    while (true) {
        std::size_t da = a.deg(), db = b.deg();
        if (db == 0) {
            acc *= pow(b.lead(), static_cast<unsigned long>(da));
            return acc;
        }
        RatPoly r = a % b;
        if (r.is_zero()) return Rational(0);
        std::size_t dr = r.deg();
        if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
        acc *= pow(b.lead(), static_cast<unsigned long>(da - dr));
        a = std::move(b);
        b = std::move(r);
    }
}

/// Discriminant of a polynomial of degree n >= 1: (-1)^{n(n-1)/2} Res(f, f') / lc(f).
inline Rational discriminant(const RatPoly& f) {
    std::size_t n = f.deg();
    if (n == 1) return Rational(1);
    Rational r = resultant(f, f.derivative()) / f.lead();
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    return r;
}

}  // namespace qtors

#endif  // QTORS_EXACTMATH_FACTOR_HPP
