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

#ifndef QTORS_CLI_VERIFY_HPP
#define QTORS_CLI_VERIFY_HPP

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtors/catalog/corpus.hpp"
#include "qtors/cli/runner.hpp"
#include "qtors/ellcurve/lutz_nagell.hpp"
#include "qtors/isogeny/isogeny.hpp"

namespace qtors::cli {

/// --skip value: a prime (skips worked examples whose expected order it divides) or "row:N".
struct SkipRule {
    unsigned long prime = 0;
    unsigned row = 0;
};

inline SkipRule parse_skip(const std::string& s) {
    SkipRule r;
    try {
        if (s.rfind("row:", 0) == 0) {
            r.row = static_cast<unsigned>(std::stoul(s.substr(4)));
            if (r.row < 1 || r.row > example_rows().size()) throw ParseError("");
        } else {
            std::size_t pos = 0;
            r.prime = std::stoul(s, &pos);
            if (pos != s.size() || !torsion_primes().count(r.prime)) throw ParseError("");
        }
    } catch (const std::exception&) {
        throw ParseError("--skip takes one of 2, 3, 5, 7, 13 or row:N with 1 <= N <= " + std::to_string(example_rows().size()));
    }
    return r;
}

inline bool skipped(const std::vector<SkipRule>& rules, unsigned row, const TorsionStructure& expected) {
    for (const SkipRule& r : rules) {
        if (r.row != 0 && r.row == row) return true;
        if (r.prime != 0 && expected.order() % r.prime == 0) return true;
    }
    return false;
}

struct VerifyOptions {
    TorsionOptions torsion;
    unsigned jobs = 1;
    std::chrono::seconds timeout{900};
    std::vector<SkipRule> skip;
    std::optional<std::string> phi_dir;
};

enum class ItemStatus { Pass, Fail, Skip };

inline const char* to_string(ItemStatus s) { return s == ItemStatus::Pass ? "pass" : s == ItemStatus::Fail ? "fail" : "skip"; }

struct SuiteItem {
    std::string group;  // table, fujita, isogeny, oracle, invariants
    std::string name;
    ItemStatus status = ItemStatus::Fail;
    std::string expected;
    std::string computed;
    std::string detail;
    double seconds = 0;
};

namespace detail {

inline SuiteItem worked_example(std::string group, std::string name, const Job& job, const TorsionStructure& expected,
                                const VerifyOptions& o) {
    JobResult r = run_job(job, o.torsion, o.timeout);
    SuiteItem it{std::move(group), std::move(name), ItemStatus::Fail, expected.to_string(), "", "", r.seconds};
    if (r.report) {
        it.computed = r.report->structure.to_string();
        it.detail = std::string(to_string(r.report->galois_type)) + ", " + to_string(r.status);
        if (r.report->structure == expected && r.status == JobStatus::Consistent) it.status = ItemStatus::Pass;
        for (const std::string& d : r.verdict.details) it.detail += "; " + d;
    } else {
        it.computed = to_string(r.status);
        it.detail = r.message;
    }
    return it;
}

inline SuiteItem published_thirteen_field(const VerifyOptions& o) {
    const ExampleRow& row = example_rows()[3];
    auto start = std::chrono::steady_clock::now();
    SuiteItem it{"table", "row 4 published field", ItemStatus::Fail, "NonGaloisQuartic, Z/1 13-part", "", "", 0};
    try {
        NumberField L = parse_field_spec(row.printed_field);
        TorsionContext ctx(parse_curve_spec(row.curve).curve);
        TorsionOptions t = o.torsion;
        t.deadline = start + o.timeout;
        GaloisType g = galois_type(L);
        TorsionStructure s = p_primary_part(ctx, L, 13, 13, t).structure;
        it.computed = std::string(to_string(g)) + ", " + s.to_string() + " 13-part";
        if (g == GaloisType::NonGaloisQuartic && s.order() == 1) it.status = ItemStatus::Pass;
        it.detail = "the published quartic is not Galois and carries no 13-torsion; row 4 is computed over " +
                    std::string(row.field);
    } catch (const std::exception& e) {
        it.computed = "error";
        it.detail = e.what();
    }
    it.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return it;
}

inline SuiteItem oracle_item(const CorpusCurve& c, const VerifyOptions& o) {
    auto start = std::chrono::steady_clock::now();
    SuiteItem it{"oracle", std::string(c.spec), ItemStatus::Fail, c.rational.to_string(), "", "", 0};
    try {
        Curve E = parse_curve_spec(c.spec).curve;
        TorsionStructure oracle = lutz_nagell_torsion(E).structure;
        TorsionOptions t = o.torsion;
        t.deadline = start + o.timeout;
        TorsionStructure engine = torsion_over_field(E, NumberField::rationals(), t).structure;
        it.computed = engine.to_string();
        it.detail = "lutz-nagell " + oracle.to_string();
        if (engine == oracle && oracle == c.rational) it.status = ItemStatus::Pass;
    } catch (const std::exception& e) {
        it.computed = "error";
        it.detail = e.what();
    }
    it.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return it;
}

inline SuiteItem invariant_item(const CorpusCurve& c, std::string_view field, const VerifyOptions& o) {
    JobResult r = run_job({std::string(c.spec), std::string(field)}, o.torsion, o.timeout);
    SuiteItem it{"invariants", std::string(c.spec) + " over " + std::string(field), ItemStatus::Fail, "consistent", "", "",
                 r.seconds};
    it.computed = to_string(r.status);
    if (r.report) {
        it.computed += " " + r.report->structure.to_string();
        for (const std::string& d : r.verdict.details) it.detail += d + "; ";
        if (r.status == JobStatus::Consistent && r.report->structure.contains(c.rational)) it.status = ItemStatus::Pass;
    } else {
        it.detail = r.message;
    }
    return it;
}

inline SuiteItem isogeny_item(std::string name, const Rational& j, const ModularPolynomial& phi, bool expect_root) {
    auto start = std::chrono::steady_clock::now();
    bool root = j_isogeny_test(j, phi);
    SuiteItem it{"isogeny", std::move(name), root == expect_root ? ItemStatus::Pass : ItemStatus::Fail,
                 expect_root ? "rational root" : "no rational root", root ? "rational root" : "no rational root", "", 0};
    it.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return it;
}

}  // namespace detail

/// The worked examples, the ℚ oracle agreement on the corpus, the j = 78608 exclusions and
/// the invariant suites over every corpus field. Throws if the modular polynomials fail to load.
inline std::vector<SuiteItem> run_verify_paper(const VerifyOptions& o) {
    const auto dir = modular_polynomial_dir(o.phi_dir);
    const ModularPolynomial phi3 = load_modular_polynomial_file(3, dir);
    const ModularPolynomial phi5 = load_modular_polynomial_file(5, dir);

    std::vector<std::function<SuiteItem()>> tasks;
    for (const ExampleRow& row : example_rows()) {
        std::string name = "row " + std::to_string(row.index);
        if (skipped(o.skip, row.index, row.expected)) {
            tasks.push_back([name, &row] { return SuiteItem{"table", name, ItemStatus::Skip, row.expected.to_string(), "", "skipped", 0}; });
            if (row.index == 4)
                tasks.push_back([] { return SuiteItem{"table", "row 4 published field", ItemStatus::Skip, "", "", "skipped", 0}; });
            continue;
        }
        tasks.push_back([name, &row, &o] {
            return detail::worked_example("table", name, {std::string(row.curve), std::string(row.field)}, row.expected, o);
        });
        if (row.index == 4) tasks.push_back([&o] { return detail::published_thirteen_field(o); });
    }
    static const FujitaExample fujita;
    if (skipped(o.skip, 0, fujita.expected)) {
        tasks.push_back([] { return SuiteItem{"fujita", "fujita example", ItemStatus::Skip, fujita.expected.to_string(), "", "skipped", 0}; });
    } else {
        tasks.push_back([&o] {
            return detail::worked_example("fujita", "fujita example", {std::string(fujita.curve), std::string(fujita.field)},
                                          fujita.expected, o);
        });
    }
    const Rational j11a1 = parse_curve_spec("0,-1,1,-10,-20").curve.j_invariant();
    tasks.push_back([&] { return detail::isogeny_item("Phi5(X, 78608)", Rational(78608), phi5, false); });
    tasks.push_back([&] { return detail::isogeny_item("Phi3(X, 78608)", Rational(78608), phi3, false); });
    tasks.push_back([&] { return detail::isogeny_item("Phi5(X, j(11a1))", j11a1, phi5, true); });
    for (const CorpusCurve& c : embedded_corpus()) tasks.push_back([&c, &o] { return detail::oracle_item(c, o); });
    for (std::string_view f : corpus_fields())
        for (const CorpusCurve& c : embedded_corpus()) tasks.push_back([&c, f, &o] { return detail::invariant_item(c, f, o); });

    return parallel_map<SuiteItem>(tasks.size(), o.jobs, [&](std::size_t i) { return tasks[i](); });
}

struct GroupCount {
    std::size_t pass = 0, fail = 0, skip = 0;
};

inline std::map<std::string, GroupCount> group_counts(const std::vector<SuiteItem>& items) {
    std::map<std::string, GroupCount> m;
    for (const SuiteItem& it : items) {
        GroupCount& g = m[it.group];
        (it.status == ItemStatus::Pass ? g.pass : it.status == ItemStatus::Fail ? g.fail : g.skip)++;
    }
    return m;
}

}  // namespace qtors::cli

#endif  // QTORS_CLI_VERIFY_HPP
