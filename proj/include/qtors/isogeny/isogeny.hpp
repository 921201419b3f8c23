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

#ifndef QTORS_ISOGENY_ISOGENY_HPP
#define QTORS_ISOGENY_ISOGENY_HPP

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qtors/error.hpp"
#include "qtors/exactmath/factor.hpp"
#include "qtors/exactmath/poly.hpp"
#include "qtors/exactmath/rational.hpp"
#include "qtors/torsion/structure.hpp"

#ifndef QTORS_DATA_DIR
#define QTORS_DATA_DIR "data"
#endif

namespace qtors {

/// Degrees of cyclic rational isogenies of elliptic curves over ℚ.
inline const std::set<unsigned long>& rational_isogeny_degrees() {
    static const std::set<unsigned long> all = [] {
        std::set<unsigned long> s;
        for (unsigned long n = 1; n <= 19; ++n) s.insert(n);
        for (unsigned long n : {21, 25, 27, 37, 43, 67, 163}) s.insert(n);
        return s;
    }();
    return all;
}

/// The subset realized by curves without complex multiplication.
inline const std::set<unsigned long>& non_cm_rational_isogeny_degrees() {
    static const std::set<unsigned long> s = [] {
        std::set<unsigned long> r;
        for (unsigned long n = 1; n <= 18; ++n) r.insert(n);
        for (unsigned long n : {21, 25, 37}) r.insert(n);
        return r;
    }();
    return s;
}

/// cm: true or unknown (nullopt) uses the full table; false uses the non-CM table.
inline bool allowed_rational_isogeny_degree(unsigned long n, std::optional<bool> cm = std::nullopt) {
    if (n == 0) throw DomainError("isogeny degree must be positive");
    const auto& table = (cm.has_value() && !*cm) ? non_cm_rational_isogeny_degrees() : rational_isogeny_degrees();
    return table.count(n) > 0;
}

/// Classical modular polynomial Φ_N(X, Y) = Σ c_ij X^i Y^j, stored with i >= j.
class ModularPolynomial {
   public:
    ModularPolynomial(unsigned level, std::map<std::pair<unsigned, unsigned>, Integer> lower)
        : level_(level), c_(std::move(lower)) {}

    unsigned level() const { return level_; }

    Integer coeff(unsigned i, unsigned j) const {
        if (i < j) std::swap(i, j);
        auto it = c_.find({i, j});
        return it == c_.end() ? Integer(0) : it->second;
    }

    /// Φ_N(X, y) as a polynomial in X.
    RatPoly specialize(const Rational& y) const {
        std::vector<Rational> out(level_ + 2, Rational(0));
        std::vector<Rational> ypow(level_ + 2);
        ypow[0] = 1;
        for (unsigned k = 1; k < ypow.size(); ++k) ypow[k] = ypow[k - 1] * y;
        for (const auto& [ij, c] : c_) {
            auto [i, j] = ij;
            out[i] += Rational(c) * ypow[j];
            if (i != j) out[j] += Rational(c) * ypow[i];
        }
        return RatPoly(std::move(out));
    }

    /// Φ_N(x, y).
    Rational evaluate(const Rational& x, const Rational& y) const { return specialize(y)(x); }

   private:
    unsigned level_;
    std::map<std::pair<unsigned, unsigned>, Integer> c_;
};

/// Reads "i j c" lines ('#' starts a comment). Entries with i < j must repeat their
/// mirror entry exactly. Validates symmetry, X-degree level+1 and the monic X^(level+1) term.
inline ModularPolynomial load_modular_polynomial(unsigned level, std::istream& in) {
    if (level != 3 && level != 5) throw DomainError("modular polynomials are available for levels 3 and 5");
    std::map<std::pair<unsigned, unsigned>, Integer> lower, upper;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string si, sj, sc, extra;
        if (!(ls >> si)) continue;
        if (!(ls >> sj >> sc) || (ls >> extra))
            throw ParseError("modular polynomial line " + std::to_string(lineno) + ": expected 'i j c'");
        auto to_index = [&](const std::string& s) {
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 3)
                throw ParseError("modular polynomial line " + std::to_string(lineno) + ": bad exponent '" + s + "'");
            return static_cast<unsigned>(std::stoul(s));
        };
        unsigned i = to_index(si), j = to_index(sj);
        Integer c;
        if (sc.empty() || sc.find_first_not_of("-0123456789") != std::string::npos || sc.find('-', 1) != std::string::npos ||
            c.set_str(sc, 10) != 0)
            throw ParseError("modular polynomial line " + std::to_string(lineno) + ": bad coefficient");
        auto& target = i >= j ? lower : upper;
        auto key = i >= j ? std::make_pair(i, j) : std::make_pair(j, i);
        if (auto [it, fresh] = target.emplace(key, c); !fresh && it->second != c)
            throw ParseError("modular polynomial line " + std::to_string(lineno) + ": conflicting duplicate entry");
    }
    for (const auto& [key, c] : upper) {
        auto it = lower.find(key);
        if (it == lower.end() || it->second != c)
            throw ParseError("modular polynomial symmetry violation at (" + std::to_string(key.second) + "," +
                             std::to_string(key.first) + ")");
    }
    unsigned maxdeg = 0;
    for (auto it = lower.begin(); it != lower.end();) {
        if (it->second == 0) {
            it = lower.erase(it);
            continue;
        }
        maxdeg = std::max(maxdeg, it->first.first);
        ++it;
    }
    if (maxdeg != level + 1) throw ParseError("modular polynomial has X-degree " + std::to_string(maxdeg));
    for (const auto& [key, c] : lower) {
        if (key.first == level + 1 && key.second != 0) throw ParseError("X^(level+1) must only appear with Y^0");
    }
    auto top = lower.find({level + 1, 0});
    if (top == lower.end() || top->second != 1) throw ParseError("modular polynomial is not monic in X");
    if (lower.count({level, level}) == 0 || lower.at({level, level}) != -1)
        throw ParseError("modular polynomial lacks the -X^N Y^N term");
    return ModularPolynomial(level, std::move(lower));
}

/// Directory holding phi3.txt and phi5.txt: explicit argument, else $QT_PHI_DIR, else the build-time data dir.
inline std::filesystem::path modular_polynomial_dir(const std::optional<std::string>& explicit_dir = std::nullopt) {
    if (explicit_dir && !explicit_dir->empty()) return *explicit_dir;
    if (const char* env = std::getenv("QT_PHI_DIR"); env && *env) return env;
    return QTORS_DATA_DIR;
}

inline ModularPolynomial load_modular_polynomial_file(unsigned level, const std::filesystem::path& dir) {
    const auto path = dir / ("phi" + std::to_string(level) + ".txt");
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return load_modular_polynomial(level, in);
}

/// Whether Φ_N(X, j) has a rational root, i.e. whether j admits a rational N-isogeny.
inline bool j_isogeny_test(const Rational& j, const ModularPolynomial& phi) {
    return !rational_roots(phi.specialize(j)).empty();
}

/// Rational isogeny degrees forced by a torsion structure over a Galois field, checked
/// against the degree table. Every n | d2 with gcd(n, d1) = 1 gives a cyclic
/// Galois-stable E(K)[n]; a 2-primary part ℤ/2 ⊕ ℤ/2^m gives the cyclic [2]-image of order 2^(m−1).
inline std::vector<std::string> cyclic_torsion_isogeny_audit(const TorsionStructure& g) {
    std::vector<std::string> violations;
    for (unsigned long n = 2; n <= g.d2(); ++n) {
        if (g.d2() % n != 0 || std::gcd(n, g.d1()) != 1) continue;
        if (!allowed_rational_isogeny_degree(n))
            violations.push_back("cyclic E(K)[" + std::to_string(n) + "] would give a rational " + std::to_string(n) + "-isogeny");
    }
    TorsionStructure two = g.primary_part(2);
    if (two.d1() == 2 && two.d2() >= 4) {
        unsigned long deg = two.d2() / 2;
        if (!allowed_rational_isogeny_degree(deg))
            violations.push_back("2-primary part " + two.to_string() + " would give a rational " + std::to_string(deg) + "-isogeny");
    }
    return violations;
}

}  // namespace qtors

#endif  // QTORS_ISOGENY_ISOGENY_HPP
