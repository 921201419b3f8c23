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

#ifndef QTORS_CATALOG_FAMILIES_HPP
#define QTORS_CATALOG_FAMILIES_HPP

#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtors/ellcurve/curve.hpp"
#include "qtors/error.hpp"
#include "qtors/numfield/classify.hpp"
#include "qtors/numfield/spec.hpp"
#include "qtors/torsion/engine.hpp"

namespace qtors {

enum class Family { FUJITA_2x16, JKL_4x8, JKL_6x6, J78608 };

/// Equation variant. The 4x8 family is published as y² + xy − cy = x³ − cx³; XSquared reads
/// the last term as cx². The 6x6 family is published with constant 54(μ⁶ − 20μ³ − 9); Hessian
/// uses 54(μ⁶ − 20μ³ − 8). Default is the reading that reproduces the stated torsion.
enum class FamilyVariant { Default, AsPrinted };

inline std::string_view to_string(Family f) {
    switch (f) {
        case Family::FUJITA_2x16: return "fujita";
        case Family::JKL_4x8: return "jkl_4x8";
        case Family::JKL_6x6: return "jkl_6x6";
        case Family::J78608: return "j78608";
    }
    return "?";
}

inline Family parse_family(std::string_view s) {
    if (s == "fujita") return Family::FUJITA_2x16;
    if (s == "jkl_4x8") return Family::JKL_4x8;
    if (s == "jkl_6x6") return Family::JKL_6x6;
    if (s == "j78608") return Family::J78608;
    throw ParseError("unknown family '" + std::string(s) + "'");
}

inline std::string_view variant_name(Family f, FamilyVariant v) {
    if (f == Family::JKL_4x8) return v == FamilyVariant::Default ? "x_squared" : "as_printed";
    if (f == Family::JKL_6x6) return v == FamilyVariant::Default ? "hessian" : "as_printed";
    return "";
}

inline FamilyVariant parse_variant(std::string_view s) {
    if (s.empty() || s == "default" || s == "x_squared" || s == "hessian") return FamilyVariant::Default;
    if (s == "as_printed") return FamilyVariant::AsPrinted;
    throw ParseError("unknown family variant '" + std::string(s) + "'");
}

struct FamilyPoint {
    Family family;
    FamilyVariant variant = FamilyVariant::Default;
    Rational parameter;
    Curve curve;
    NumberField field;
    /// Squarefree m, n with field = ℚ(√m, √n); empty for the j = 78608 family (field ℚ).
    std::vector<Integer> radicands;
    TorsionStructure expected;
};

/// y² = x(x + (t²−1)⁴)(x + (2t)⁴) over ℚ(√(t(t²−1)), √((t²−1)(t²+1)(t²+2t−1))).
inline FamilyPoint family_fujita(long t) {
    if (t <= 1) throw DomainError("fujita family needs an integer t > 1");
    Integer T(t);
    Integer A = pow(Integer(T * T - 1), 4u), B = pow(Integer(2 * T), 4u);
    Curve E(0, Rational(A + B), 0, Rational(A * B), 0);
    Integer m = squarefree_part(Integer(T * (T * T - 1)));
    Integer n = squarefree_part(Integer((T * T - 1) * (T * T + 1) * (T * T + 2 * T - 1)));
    return {Family::FUJITA_2x16, FamilyVariant::Default, Rational(T), E, biquadratic_field(m, n), {m, n}, {2, 16}};
}

/// 4x8: ν = (t⁴−6t²+1)/(4(t²+1)²), c = ν² − 1/16, K = ℚ(√−1, √(t⁴−6t²+1)).
/// 6x6: μ = (2t³+1)/(3t²), y² = x³ − 27μ(μ³+8)x + 54(μ⁶−20μ³−k), K = ℚ(√−3, √(8t³+1)).
inline FamilyPoint family_jkl(Family which, const Rational& t, FamilyVariant v = FamilyVariant::Default) {
    if (which == Family::JKL_4x8) {
        if (sgn(t) == 0 || t == 1 || t == -1) throw DomainError("4x8 family excludes t = 0, 1, -1");
        Rational t2 = t * t;
        Rational q = t2 * t2 - 6 * t2 + 1;
        Rational nu = q / (4 * (t2 + 1) * (t2 + 1));
        Rational c = nu * nu - Rational(1, 16);
        // As printed, (1 − c)x³ on the right; x ↦ x/(1−c), y ↦ y/(1−c) makes it monic.
        Curve E = v == FamilyVariant::Default ? Curve(1, -c, -c, 0, 0) : Curve(1, 0, Rational(-c * (1 - c)), 0, 0);
        Integer n = squarefree_part(q);
        return {which, v, t, E, biquadratic_field(Rational(-1), Rational(n)), {Integer(-1), n}, {4, 8}};
    }
    if (which == Family::JKL_6x6) {
        if (sgn(t) == 0 || t == 1 || t == Rational(-1, 2)) throw DomainError("6x6 family excludes t = 0, 1, -1/2");
        Rational mu = (2 * t * t * t + 1) / (3 * t * t);
        Rational m3 = mu * mu * mu;
        long k = v == FamilyVariant::Default ? 8 : 9;
        Curve E(0, 0, 0, Rational(-27 * mu * (m3 + 8)), Rational(54 * (m3 * m3 - 20 * m3 - k)));
        Integer n = squarefree_part(Rational(8 * t * t * t + 1));
        return {which, v, t, E, biquadratic_field(Rational(-3), Rational(n)), {Integer(-3), n}, {6, 6}};
    }
    throw DomainError("family_jkl takes jkl_4x8 or jkl_6x6");
}

/// y² = x(x² + 10s·x + 5s²), j = 78608 for every s; over ℚ it has exactly one rational
/// 2-torsion point since 80s² is not a square.
inline FamilyPoint family_j78608(const Rational& s) {
    if (sgn(s) == 0) throw DomainError("j78608 family needs s != 0");
    Curve E(0, Rational(10 * s), 0, Rational(5 * s * s), 0);
    return {Family::J78608, FamilyVariant::Default, s, E, NumberField::rationals(), {}, {1, 2}};
}

inline FamilyPoint family_point(Family f, const Rational& t, FamilyVariant v = FamilyVariant::Default) {
    switch (f) {
        case Family::FUJITA_2x16:
            if (t.get_den() != 1 || !t.get_num().fits_slong_p()) throw DomainError("fujita family needs an integer t");
            return family_fujita(t.get_num().get_si());
        case Family::JKL_4x8:
        case Family::JKL_6x6: return family_jkl(f, t, v);
        case Family::J78608: return family_j78608(t);
    }
    throw DomainError("unknown family");
}

struct ScanRow {
    Family family;
    std::string variant;
    Rational parameter;
    std::string curve;  // a-invariants, empty if construction failed
    std::string field;  // defining polynomial coefficients, low degree first
    TorsionStructure expected;
    std::optional<TorsionStructure> computed;
    std::string error;
    bool match() const { return computed && *computed == expected; }
};

/// One row per parameter; construction or computation failures become rows with `error` set.
inline std::vector<ScanRow> run_family_scan(Family f, const std::vector<Rational>& params,
                                            FamilyVariant v = FamilyVariant::Default, const TorsionOptions& opt = {}) {
    std::vector<ScanRow> rows;
    for (const Rational& t : params) {
        ScanRow r{f, std::string(variant_name(f, v)), t, "", "", {}, std::nullopt, ""};
        try {
            FamilyPoint fp = family_point(f, t, v);
            r.curve = format_curve(fp.curve);
            r.field = format_ratpoly(fp.field.defining_poly());
            r.expected = fp.expected;
            r.computed = torsion_over_field(fp.curve, fp.field, opt).structure;
        } catch (const Timeout&) {
            throw;
        } catch (const Error& e) {
            r.error = e.what();
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

inline double match_rate(const std::vector<ScanRow>& rows) {
    if (rows.empty()) return 1.0;
    std::size_t k = 0;
    for (const ScanRow& r : rows) k += r.match();
    return static_cast<double>(k) / static_cast<double>(rows.size());
}

/// Squarefree d in the order −1, 2, −2, 3, −3, 5, −5, … with |d| ≤ bound.
inline std::vector<Integer> quadratic_candidates(long bound) {
    std::vector<Integer> out{Integer(-1)};
    for (long a = 2; a <= bound; ++a) {
        if (squarefree_part(Integer(a)) != a) continue;
        out.emplace_back(a);
        out.emplace_back(-a);
    }
    return out;
}

/// First d in candidate order, d not a square in F1, with E(F1(√d))_tors = E(F1)_tors. Exhausting the bound throws InvariantViolation, since such
/// a d always exists.
inline Integer torsion_preserving_quadratic(const Curve& E, const NumberField& F1, long bound = 200,
                                            const TorsionOptions& opt = {}) {
    if (F1.degree() != 2) throw DomainError("torsion_preserving_quadratic needs a quadratic field");
    TorsionOptions o = opt;
    o.growth_chain = false;
    TorsionContext ctx(E);
    const Integer m = quadratic_subfields(F1).front();
    const TorsionStructure base = torsion_over_field(ctx, F1, o).structure;
    for (const Integer& d : quadratic_candidates(bound)) {
        if (is_rational_square(Rational(d * m))) continue;
        if (torsion_over_field(ctx, biquadratic_field(Rational(m), Rational(d)), o).structure == base) return d;
    }
    throw InvariantViolation("no torsion-preserving quadratic extension with |d| <= " + std::to_string(bound));
}

}  // namespace qtors

#endif  // QTORS_CATALOG_FAMILIES_HPP
