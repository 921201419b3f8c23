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

#ifndef QTORS_CLI_REPORT_HPP
#define QTORS_CLI_REPORT_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "qtors/catalog/tables.hpp"
#include "qtors/numfield/roots.hpp"
#include "qtors/torsion/engine.hpp"

namespace qtors::cli {

using Json = nlohmann::ordered_json;

// Numbers are emitted as strings: coefficients overflow doubles and output must be byte-stable.

inline Json rational_list(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const Rational& r : v) a.push_back(to_string(r));
    return a;
}

inline Json structure_json(const TorsionStructure& s) {
    return Json::array({std::to_string(s.d1()), std::to_string(s.d2())});
}

inline Json field_json(const NumberField& K, GaloisType g) {
    const RatPoly& f = K.defining_poly();
    std::vector<Rational> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = f[i];
    Json j;
    j["poly"] = rational_list(c);
    j["galois_type"] = std::string(to_string(g));
    return j;
}

/// Whether K is ℚ(ζ₅): degree 4 and Φ₅ has a root in K.
inline bool is_zeta5_field(const NumberField& K) {
    if (K.degree() != 4) return false;
    RatPoly cyc{Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)};
    return !roots_in_field(cyc, K).empty();
}

inline Verdict report_verdict(const TorsionReport& r) {
    return verdict(r.structure, r.galois_type, is_zeta5_field(r.field));
}

inline Json verdict_json(const Verdict& v) {
    Json j;
    j["consistent"] = v.consistent;
    j["details"] = v.details;
    return j;
}

inline Json report_json(const TorsionReport& r) {
    Json j;
    j["curve"] = rational_list({r.curve.a1(), r.curve.a2(), r.curve.a3(), r.curve.a4(), r.curve.a6()});
    if (r.label) j["label"] = *r.label;
    j["field"] = field_json(r.field, r.galois_type);
    j["structure"] = structure_json(r.structure);
    Json gens = Json::array();
    for (const Point& P : r.generators) {
        if (P.is_infinity()) continue;
        gens.push_back(Json::array({rational_list(P.x().coeffs()), rational_list(P.y().coeffs())}));
    }
    j["generators"] = gens;
    Json pp = Json::object();
    for (const auto& [p, s] : r.per_prime) pp[std::to_string(p)] = structure_json(s);
    j["per_prime"] = pp;
    Json dd = Json::object();
    for (const auto& [n, d] : r.point_definition_degrees) dd[std::to_string(n)] = std::to_string(d);
    j["point_definition_degrees"] = dd;
    Json chain = Json::array();
    for (const GrowthStep& g : r.growth_chain) chain.push_back({{"field", g.field}, {"structure", structure_json(g.structure)}});
    j["growth_chain"] = chain;
    Json checks = Json::array();
    for (const CheckResult& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
    j["checks"] = checks;
    j["assumptions"] = r.assumptions;
    return j;
}

}  // namespace qtors::cli

#endif  // QTORS_CLI_REPORT_HPP
