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

#ifndef QTORS_TORSION_ENGINE_HPP
#define QTORS_TORSION_ENGINE_HPP

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtors/catalog/tables.hpp"
#include "qtors/ellcurve/curve.hpp"
#include "qtors/ellcurve/divpoly.hpp"
#include "qtors/ellcurve/group.hpp"
#include "qtors/error.hpp"
#include "qtors/exactmath/factor.hpp"
#include "qtors/isogeny/isogeny.hpp"
#include "qtors/numfield/classify.hpp"
#include "qtors/numfield/roots.hpp"
#include "qtors/numfield/spec.hpp"
#include "qtors/torsion/bounds.hpp"
#include "qtors/torsion/structure.hpp"

namespace qtors {

struct TorsionOptions {
    /// Lift one layer past each proven exponent cap and require it to be empty.
    bool debug_extra_lift = false;
    /// Recount 2-power torsion from primitive division polynomials factored over ℚ.
    bool divpoly_cross_check = false;
    /// Recompute E(ℚ) and E(F) for the quadratic subfields F and check the growth table.
    bool growth_chain = true;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct GrowthStep {
    std::string field;  // "Q" or "Q(sqrt(m))"
    TorsionStructure structure;
};

struct TorsionReport {
    Curve curve;
    std::optional<std::string> label;
    NumberField field;
    GaloisType galois_type;
    TorsionStructure structure;
    std::vector<Point> generators;
    std::map<unsigned long, TorsionStructure> per_prime;
    /// Order n → minimal degree over ℚ of the field of definition of a point of order n.
    std::map<unsigned long, std::size_t> point_definition_degrees;
    std::vector<GrowthStep> growth_chain;
    std::vector<CheckResult> checks;
    std::vector<std::string> assumptions;
};

inline const char* kTorsionPrimeAssumption = "torsion primes lie in {2,3,5,7,13} for [K:Q] <= 4 (imported, not certified)";

/// Per-curve caches shared by computations over several fields. Not thread-safe;
/// use one context per thread.
class TorsionContext {
   public:
    explicit TorsionContext(Curve E) : E_(std::move(E)), dp_(division_polynomials(E_)) {}

    const Curve& curve() const { return E_; }

    /// Irreducible factors of degree ≤ 4 of the 2-division cubic (p = 2) or of ψ_p.
    const std::vector<RatPoly>& small_factors(unsigned long p) {
        auto it = factors_.find(p);
        if (it != factors_.end()) return it->second;
        const RatPoly& g = p == 2 ? dp_.two_division() : dp_.f(static_cast<long>(p));
        std::vector<RatPoly> polys;
        for (Factor& f : factor_bounded(g, 4)) polys.push_back(std::move(f.poly));
        return factors_.emplace(p, std::move(polys)).first->second;
    }

    /// (φ_m, ψ_m²).
    const std::pair<RatPoly, RatPoly>& xmap(unsigned long m) {
        auto it = xmaps_.find(m);
        if (it != xmaps_.end()) return it->second;
        return xmaps_.emplace(m, dp_.mult_by_m_xmap(static_cast<long>(m))).first->second;
    }

    DivisionPolynomials<Rational>& division_polys() { return dp_; }

   private:
    Curve E_;
    DivisionPolynomials<Rational> dp_;
    std::map<unsigned long, std::vector<RatPoly>> factors_;
    std::map<unsigned long, std::pair<RatPoly, RatPoly>> xmaps_;
};

/// The p-primary subgroup E(K)[p^∞] with the point counts #E(K)[p^k] it was built from.
struct PrimaryPart {
    unsigned long p = 0;
    TorsionStructure structure;
    std::vector<Point> points;
    std::map<unsigned long, unsigned long> counts;
};

namespace detail {

inline void check_deadline(const TorsionOptions& opt) {
    if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline) throw Timeout("torsion computation exceeded its deadline");
}

inline void sort_unique_points(std::vector<Point>& v) {
    std::sort(v.begin(), v.end(), point_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline bool contains_point(const std::vector<Point>& sorted, const Point& P) {
    return std::binary_search(sorted.begin(), sorted.end(), P, point_less);
}

/// E(K)[p], including O.
inline std::vector<Point> level_one(TorsionContext& ctx, const NumberField& K, unsigned long p) {
    const Curve& E = ctx.curve();
    std::vector<Point> out{Point::infinity(E, K)};
    for (const RatPoly& g : ctx.small_factors(p)) {
        if (g.deg() > K.degree() || K.degree() % g.deg() != 0) continue;
        for (const FieldElement& x : roots_in_field(g, K))
            for (Point& P : points_with_x(E, K, x)) out.push_back(std::move(P));
    }
    sort_unique_points(out);
    return out;
}

/// All Q in E(K) with [p]Q = P, P ≠ O.
inline std::vector<Point> preimages(TorsionContext& ctx, const NumberField& K, const Point& P, unsigned long p) {
    const auto& [phi, den] = ctx.xmap(p);
    KPoly h = lift(phi, K) - lift(den, K) * P.x();
    std::vector<Point> out;
    for (const FieldElement& x : roots_in_field(h, K))
        for (Point& Q : points_with_x(ctx.curve(), K, x))
            if (scalar_mul(Q, static_cast<long>(p)) == P) out.push_back(std::move(Q));
    return out;
}

}  // namespace detail

/// E(K)[p^∞], lifting layer by layer until the layer stops growing or the exponent
/// reaches `cap`. With debug_extra_lift the layer past the cap is computed and must be empty.
inline PrimaryPart p_primary_part(TorsionContext& ctx, const NumberField& K, unsigned long p, unsigned long cap,
                                  const TorsionOptions& opt = {}) {
    detail::check_deadline(opt);
    PrimaryPart out;
    out.p = p;
    std::vector<Point> S = detail::level_one(ctx, K, p);
    out.counts[p] = S.size();
    std::vector<Point> fresh;
    for (const Point& P : S)
        if (!P.is_infinity()) fresh.push_back(P);
    unsigned long n = p;
    while (!fresh.empty()) {
        const bool past_cap = n >= cap;
        if (past_cap && !opt.debug_extra_lift) break;
        std::vector<Point> next = S;
        std::vector<std::pair<Point, std::vector<Point>>> done;
        for (const Point& P : fresh) {
            detail::check_deadline(opt);
            std::vector<Point> pre;
            auto twin = std::find_if(done.begin(), done.end(), [&](const auto& d) { return d.first == -P; });
            if (twin != done.end()) {
                for (const Point& Q : twin->second) pre.push_back(-Q);
            } else {
                pre = detail::preimages(ctx, K, P, p);
            }
            next.insert(next.end(), pre.begin(), pre.end());
            done.emplace_back(P, std::move(pre));
        }
        detail::sort_unique_points(next);
        if (past_cap) {
            if (next.size() != S.size())
                throw InvariantViolation("points of order " + std::to_string(n * p) + " beyond the proven exponent bound " +
                                         std::to_string(cap));
            break;
        }
        if (next.size() == S.size()) break;
        fresh.clear();
        for (const Point& Q : next)
            if (!detail::contains_point(S, Q)) fresh.push_back(Q);
        S = std::move(next);
        n *= p;
        out.counts[n] = S.size();
    }
    out.structure = structure_from_counts(out.counts);
    if (out.structure.order() != S.size()) throw InvariantViolation("p-primary point count is not the group order");
    out.points = std::move(S);
    return out;
}

inline PrimaryPart p_primary_part(const Curve& E, const NumberField& K, unsigned long p, const TorsionOptions& opt = {}) {
    TorsionContext ctx(E);
    GaloisType g = galois_type(K);
    return p_primary_part(ctx, K, p, p_primary_bound(p, g).d2(), opt);
}

// Individual invariant checks. Each returns its verdict; torsion_over_field turns failures into InvariantViolation.

inline CheckResult check_prime_bounds(const std::map<unsigned long, TorsionStructure>& per_prime, GaloisType g) {
    CheckResult c{"prime_bounds", true, ""};
    for (const auto& [p, part] : per_prime) {
        TorsionStructure b = p_primary_bound(p, g);
        if (!b.contains(part)) {
            c.passed = false;
            c.detail += part.to_string() + " exceeds the " + std::to_string(p) + "-primary bound " + b.to_string() + "; ";
        }
    }
    return c;
}

inline CheckResult check_weil_full_level(const TorsionStructure& s, GaloisType g) {
    CheckResult c{"weil_full_level", true, ""};
    if (!full_level_allowed(g).count(s.d1())) {
        c.passed = false;
        c.detail = "full " + std::to_string(s.d1()) + "-torsion over a " + std::string(to_string(g)) + " field";
    }
    return c;
}

inline CheckResult check_two_torsion_rigidity(bool cubic_irreducible, const TorsionStructure& s) {
    CheckResult c{"two_torsion_rigidity", true, cubic_irreducible ? "" : "2-division cubic has a rational factor"};
    if (cubic_irreducible && s.d2() % 2 == 0) {
        c.passed = false;
        c.detail = "irreducible 2-division cubic but 2-torsion found";
    }
    return c;
}

inline CheckResult check_landau_bound(const TorsionStructure& s, GaloisType g, std::size_t degree) {
    CheckResult c{"landau_bound", true, ""};
    for (unsigned long p : torsion_primes()) {
        if (s.d1() % p != 0) continue;
        if (p - 1 > landau_g(static_cast<unsigned>(degree))) {
            c.passed = false;
            c.detail += "full " + std::to_string(p) + "-torsion over a degree " + std::to_string(degree) + " field; ";
        }
        if (g == GaloisType::CyclicQuartic && p != 2 && p != 5) {
            c.passed = false;
            c.detail += "full " + std::to_string(p) + "-torsion over a cyclic quartic field; ";
        }
    }
    return c;
}

/// Every point of order 7 over a quartic field is defined over a subfield of degree ≤ 2.
inline CheckResult check_order7_definition(const std::vector<std::size_t>& order7_degrees, std::size_t field_degree) {
    CheckResult c{"order7_definition_degree", true, ""};
    if (field_degree != 4) return c;
    for (std::size_t d : order7_degrees) {
        if (d > 2) {
            c.passed = false;
            c.detail = "a point of order 7 needs the full quartic field";
        }
    }
    return c;
}

inline CheckResult check_isogeny_audit(const TorsionStructure& s) {
    CheckResult c{"isogeny_audit", true, ""};
    for (const std::string& v : cyclic_torsion_isogeny_audit(s)) {
        c.passed = false;
        c.detail += v + "; ";
    }
    return c;
}

inline CheckResult check_cyclic_excluded_orders(const TorsionStructure& s, GaloisType g) {
    CheckResult c{"cyclic_excluded_orders", true, ""};
    if (g != GaloisType::CyclicQuartic) return c;
    for (unsigned long n : {11, 14, 18, 20, 21, 22, 24}) {
        if (s.d2() % n == 0) {
            c.passed = false;
            c.detail += "point of order " + std::to_string(n) + "; ";
        }
    }
    return c;
}

inline CheckResult check_excluded_subgroups(const TorsionStructure& s) {
    CheckResult c{"excluded_quartic_subgroups", true, ""};
    for (const TorsionStructure& bad : classification_table(TableId::BN_EXCLUDED_QUARTIC)) {
        if (s.contains(bad)) {
            c.passed = false;
            c.detail += "contains " + bad.to_string() + "; ";
        }
    }
    return c;
}

/// E(ℚ) ⊆ E(F) ⊆ E(K) along the chain and every (E(ℚ), E(F)) pair allowed by the growth table.
inline CheckResult check_growth_chain(const std::vector<GrowthStep>& chain, const TorsionStructure& top) {
    CheckResult c{"growth_chain", true, ""};
    if (chain.empty()) return c;
    const TorsionStructure& gq = chain.front().structure;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        const TorsionStructure& gf = chain[i].structure;
        GrowthCheck g = growth_consistency(gq, gf);
        if (!g.allowed) {
            c.passed = false;
            c.detail += gq.to_string() + " -> " + gf.to_string() + " over " + chain[i].field + " is not an allowed growth; ";
        }
        if (!gf.contains(gq) || !top.contains(gf)) {
            c.passed = false;
            c.detail += "torsion over " + chain[i].field + " does not fit between Q and K; ";
        }
    }
    if (!top.contains(gq)) {
        c.passed = false;
        c.detail += "E(Q)_tors does not embed in E(K)_tors; ";
    }
    return c;
}

namespace detail {

struct CoreResult {
    TorsionStructure structure;
    std::vector<PrimaryPart> parts;
};

inline CoreResult core_torsion(TorsionContext& ctx, const NumberField& K, GaloisType g, const TorsionOptions& opt) {
    CoreResult r;
    for (unsigned long p : torsion_primes()) {
        PrimaryPart part = p_primary_part(ctx, K, p, p_primary_bound(p, g).d2(), opt);
        r.structure = r.structure.coprime_sum(part.structure);
        r.parts.push_back(std::move(part));
    }
    return r;
}

inline std::vector<Point> all_points(const std::vector<PrimaryPart>& parts, const Curve& E, const NumberField& K) {
    std::vector<Point> all{Point::infinity(E, K)};
    for (const PrimaryPart& part : parts) {
        if (part.points.size() <= 1) continue;
        std::vector<Point> next;
        next.reserve(all.size() * part.points.size());
        for (const Point& a : all)
            for (const Point& b : part.points) next.push_back(a + b);
        all = std::move(next);
    }
    sort_unique_points(all);
    return all;
}

/// Number of K-points of exact order n found from the primitive n-division polynomial.
inline unsigned long exact_order_count_from_divpoly(const Curve& E, const NumberField& K, long n) {
    unsigned long count = 0;
    for (const Factor& f : factor_bounded(primitive_division_polynomial(E, n), K.degree())) {
        const RatPoly& g = f.poly;
        if (K.degree() % g.deg() != 0) continue;
        for (const FieldElement& x : roots_in_field(g, K)) count += points_with_x(E, K, x).size();
    }
    return count;
}

inline std::string quadratic_label(const Integer& m) { return "Q(sqrt(" + m.get_str() + "))"; }

}  // namespace detail

/// E(K)_tors for E/ℚ and K of degree 1, 2 or Galois of degree 4, with every invariant check run.
/// A failed check throws InvariantViolation.
inline TorsionReport torsion_over_field(TorsionContext& ctx, const NumberField& K, const TorsionOptions& opt = {}) {
    const Curve& E = ctx.curve();
    const GaloisType type = galois_type(K);
    if (type == GaloisType::NonGaloisQuartic) throw UnsupportedField("torsion over non-Galois quartic fields is not supported");

    detail::CoreResult core = detail::core_torsion(ctx, K, type, opt);
    const TorsionStructure& s = core.structure;
    std::vector<Point> all = detail::all_points(core.parts, E, K);
    if (all.size() != s.order()) throw InvariantViolation("assembled group has the wrong order");

    TorsionReport rep{E, std::nullopt, K, type, s, {}, {}, {}, {}, {}, {kTorsionPrimeAssumption}};
    for (const PrimaryPart& part : core.parts)
        if (part.structure.order() > 1) rep.per_prime.emplace(part.p, part.structure);
    rep.generators = choose_generators(all, s);

    std::vector<std::size_t> order7_degrees;
    for (const Point& P : all) {
        if (P.is_infinity()) continue;
        unsigned long ord = *order_bounded(P, static_cast<unsigned>(s.d2()));
        std::size_t deg = definition_degree({P.x(), P.y()}, K);
        auto [it, fresh] = rep.point_definition_degrees.emplace(ord, deg);
        if (!fresh) it->second = std::min(it->second, deg);
        if (ord == 7) order7_degrees.push_back(deg);
    }

    const auto& two_factors = ctx.small_factors(2);
    const bool cubic_irreducible = two_factors.size() == 1 && two_factors.front().deg() == 3;
    rep.checks.push_back(check_prime_bounds(rep.per_prime, type));
    rep.checks.push_back(check_weil_full_level(s, type));
    rep.checks.push_back(check_two_torsion_rigidity(cubic_irreducible, s));
    rep.checks.push_back(check_landau_bound(s, type, K.degree()));
    rep.checks.push_back(check_order7_definition(order7_degrees, K.degree()));
    rep.checks.push_back(check_isogeny_audit(s));
    rep.checks.push_back(check_cyclic_excluded_orders(s, type));
    rep.checks.push_back(check_excluded_subgroups(s));

    if (opt.growth_chain && K.degree() > 1) {
        NumberField Q;
        rep.growth_chain.push_back({"Q", detail::core_torsion(ctx, Q, GaloisType::Rational, opt).structure});
        if (K.degree() == 4) {
            for (const Integer& m : quadratic_subfields(K)) {
                NumberField F = quadratic_field(Rational(m));
                rep.growth_chain.push_back({detail::quadratic_label(m), detail::core_torsion(ctx, F, GaloisType::Quadratic, opt).structure});
            }
        } else {
            rep.growth_chain.push_back({"K", s});
        }
        rep.checks.push_back(check_growth_chain(rep.growth_chain, s));
    }

    if (opt.divpoly_cross_check) {
        CheckResult c{"divpoly_cross_check", true, ""};
        const PrimaryPart& two = core.parts.front();
        unsigned long prev = 1;
        for (unsigned long n = 2; n <= p_primary_bound(2, type).d2(); n *= 2) {
            detail::check_deadline(opt);
            unsigned long total = s.primary_part(2).count(n);
            unsigned long expected = total - prev;
            unsigned long found = detail::exact_order_count_from_divpoly(E, K, static_cast<long>(n));
            if (found != expected) {
                c.passed = false;
                c.detail += "order " + std::to_string(n) + ": lifting " + std::to_string(expected) + ", division polynomial " +
                            std::to_string(found) + "; ";
            }
            prev = total;
            if (two.structure.d2() < n) break;
        }
        rep.checks.push_back(c);
    }

    for (const CheckResult& c : rep.checks)
        if (!c.passed) throw InvariantViolation(c.name + ": " + c.detail);
    return rep;
}

inline TorsionReport torsion_over_field(const Curve& E, const NumberField& K, const TorsionOptions& opt = {}) {
    TorsionContext ctx(E);
    return torsion_over_field(ctx, K, opt);
}

}  // namespace qtors

#endif  // QTORS_TORSION_ENGINE_HPP
