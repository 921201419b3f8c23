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

#ifndef QTORS_TORSION_STRUCTURE_HPP
#define QTORS_TORSION_STRUCTURE_HPP

#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qtors/error.hpp"

namespace qtors {

/// ℤ/d1 ⊕ ℤ/d2 with d1 | d2.
class TorsionStructure {
   public:
    constexpr TorsionStructure() = default;
    constexpr TorsionStructure(unsigned long d1, unsigned long d2) : d1_(d1), d2_(d2) {
        if (d1 == 0 || d2 == 0 || d2 % d1 != 0) throw DomainError("torsion structure needs d1 | d2, both positive");
    }
    /// ℤ/n.
    static constexpr TorsionStructure cyclic(unsigned long n) { return TorsionStructure(1, n); }

    constexpr unsigned long d1() const { return d1_; }
    constexpr unsigned long d2() const { return d2_; }
    constexpr unsigned long order() const { return d1_ * d2_; }
    constexpr bool is_cyclic() const { return d1_ == 1; }

    /// #G[n].
    constexpr unsigned long count(unsigned long n) const { return std::gcd(n, d1_) * std::gcd(n, d2_); }

    /// The p-primary part.
    TorsionStructure primary_part(unsigned long p) const {
        auto part = [p](unsigned long d) {
            unsigned long r = 1;
            while (d % p == 0) {
                d /= p;
                r *= p;
            }
            return r;
        };
        return TorsionStructure(part(d1_), part(d2_));
    }

    /// Whether G contains a subgroup isomorphic to h.
    constexpr bool contains(const TorsionStructure& h) const { return d1_ % h.d1_ == 0 && d2_ % h.d2_ == 0; }

    /// Direct sum with a group of coprime order.
    TorsionStructure coprime_sum(const TorsionStructure& o) const {
        if (std::gcd(order(), o.order()) != 1) throw DomainError("coprime_sum of groups with a common prime");
        return TorsionStructure(d1_ * o.d1_, d2_ * o.d2_);
    }

    std::string to_string() const {
        if (d1_ == 1) return "Z/" + std::to_string(d2_);
        return "Z/" + std::to_string(d1_) + " x Z/" + std::to_string(d2_);
    }

    friend constexpr auto operator<=>(const TorsionStructure&, const TorsionStructure&) = default;

   private:
    unsigned long d1_ = 1;
    unsigned long d2_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const TorsionStructure& g) { return os << g.to_string(); }

/// The unique (d1, d2) with #G[n] = gcd(n, d1)·gcd(n, d2) for every n in counts,
/// searching d1 | d2 | lcm(keys).
inline TorsionStructure structure_from_counts(const std::map<unsigned long, unsigned long>& counts) {
    unsigned long L = 1;
    for (const auto& [n, c] : counts) {
        if (n == 0 || c == 0) throw DomainError("counts must be positive");
        L = std::lcm(L, n);
    }
    std::vector<unsigned long> divisors;
    for (unsigned long d = 1; d <= L; ++d)
        if (L % d == 0) divisors.push_back(d);
    std::optional<TorsionStructure> found;
    for (unsigned long d2 : divisors) {
        for (unsigned long d1 : divisors) {
            if (d1 > d2 || d2 % d1 != 0) continue;
            TorsionStructure g(d1, d2);
            bool ok = true;
            for (const auto& [n, c] : counts) ok = ok && g.count(n) == c;
            if (!ok) continue;
            if (found) throw DomainError("counts do not determine a unique group");
            found = g;
        }
    }
    if (!found) throw DomainError("counts are not realizable by a group of rank at most 2");
    return *found;
}

}  // namespace qtors

#endif  // QTORS_TORSION_STRUCTURE_HPP
