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

// quartic-torsion: torsion of elliptic curves over ℚ in quartic Galois fields.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qtors/catalog/corpus.hpp"
#include "qtors/catalog/families.hpp"
#include "qtors/cli/report.hpp"
#include "qtors/cli/runner.hpp"
#include "qtors/cli/verify.hpp"
#include "qtors/ellcurve/lutz_nagell.hpp"

namespace {

using namespace qtors;
using namespace qtors::cli;

struct Common {
    bool json = false;
    bool csv = false;
    unsigned jobs = 1;
    bool debug_extra_lift = false;
    long timeout = 900;
    std::string out;

    TorsionOptions torsion() const {
        TorsionOptions o;
        o.debug_extra_lift = debug_extra_lift;
        return o;
    }
    std::chrono::seconds limit() const { return std::chrono::seconds(timeout); }
};

void add_common(CLI::App* app, Common& c) {
    auto* fmt = app->add_flag("--json", c.json, "JSON output");
    app->add_flag("--csv", c.csv, "CSV output")->excludes(fmt);
    app->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    app->add_flag("--debug-extra-lift", c.debug_extra_lift, "lift one layer past each exponent cap and require it empty");
    app->add_option("--timeout", c.timeout, "per-job limit in seconds")->check(CLI::PositiveNumber);
    app->add_option("--out", c.out, "write output here instead of stdout");
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw ParseError("cannot write " + c.out);
    f << text;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
        std::string t = qtors::detail::trim(line);
        if (!t.empty() && t[0] != '#') out.push_back(t);
    }
    return out;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

std::string pair_text(const TorsionStructure& s) { return "(" + std::to_string(s.d1()) + "," + std::to_string(s.d2()) + ")"; }

int exit_code(bool ok) { return ok ? 0 : 1; }

// ---- torsion ---------------------------------------------------------------

int cmd_torsion(const Common& c, const std::string& curve, const std::string& field) {
    JobResult r = run_job({curve, field}, c.torsion(), c.limit());
    std::cerr << "time " << r.seconds << " s\n";
    emit(c, job_json(r).dump(2) + "\n");
    if (r.status == JobStatus::Error) return 2;
    return exit_code(r.status == JobStatus::Consistent);
}

// ---- field -----------------------------------------------------------------

int cmd_field(const Common& c, const std::string& spec) {
    NumberField K = parse_field_spec(spec);
    GaloisType g = galois_type(K);
    if (c.json) {
        Json j = field_json(K, g);
        Json subs = Json::array();
        for (const Integer& m : quadratic_subfields(K)) subs.push_back(m.get_str());
        j["quadratic_subfields"] = subs;
        emit(c, j.dump(2) + "\n");
    } else {
        emit(c, std::string(to_string(g)) + "\n");
    }
    return 0;
}

// ---- family-scan -------------------------------------------------------------

int cmd_family_scan(const Common& c, const std::string& family, long from, long to, const std::string& params,
                    const std::string& variant) {
    const Family f = parse_family(family);
    std::vector<Rational> ts;
    if (!params.empty()) {
        for (const std::string& p : qtors::detail::split(params, ',')) ts.push_back(parse_rational(qtors::detail::trim(p)));
    } else {
        for (long t = from; t <= to; ++t) ts.emplace_back(t);
    }
    std::vector<FamilyVariant> variants;
    if (variant == "both") {
        variants = {FamilyVariant::Default, FamilyVariant::AsPrinted};
    } else {
        variants = {parse_variant(variant)};
    }

    std::vector<ScanRow> rows;
    std::vector<std::pair<std::string, double>> rates;
    for (FamilyVariant v : variants) {
        auto part = parallel_map<ScanRow>(ts.size(), c.jobs, [&](std::size_t i) {
            TorsionOptions o = c.torsion();
            o.deadline = std::chrono::steady_clock::now() + c.limit();
            try {
                return run_family_scan(f, {ts[i]}, v, o).front();
            } catch (const Timeout&) {
                return ScanRow{f, std::string(variant_name(f, v)), ts[i], "", "", {}, std::nullopt, "timeout"};
            }
        });
        rates.emplace_back(std::string(variant_name(f, v)), match_rate(part));
        rows.insert(rows.end(), part.begin(), part.end());
    }

    std::ostringstream os;
    if (c.json) {
        Json j = Json::array();
        for (const ScanRow& r : rows) {
            Json e;
            e["family"] = std::string(to_string(r.family));
            e["variant"] = r.variant;
            e["t"] = to_string(r.parameter);
            e["curve"] = r.curve;
            e["field_poly"] = r.field;
            e["expected"] = structure_json(r.expected);
            if (r.computed) e["computed"] = structure_json(*r.computed);
            if (!r.error.empty()) e["error"] = r.error;
            e["match"] = r.match();
            j.push_back(e);
        }
        os << j.dump(2) << "\n";
    } else {
        os << "family,t,a-invariants,field poly,expected,computed,match\n";
        for (const ScanRow& r : rows) {
            std::string fam(to_string(r.family));
            if (!r.variant.empty()) fam += ":" + r.variant;
            std::string computed = r.computed ? pair_text(*r.computed) : (r.error == "timeout" ? "timeout" : "error: " + r.error);
            os << csv_cell(fam) << ',' << csv_cell(to_string(r.parameter)) << ',' << csv_cell(r.curve) << ','
               << csv_cell(r.field) << ',' << csv_cell(r.curve.empty() ? "" : pair_text(r.expected)) << ','
               << csv_cell(computed) << ',' << (r.match() ? "true" : "false") << "\n";
        }
    }
    emit(c, os.str());

    double best = ts.empty() ? 1.0 : 0.0;
    for (const auto& [name, rate] : rates) {
        std::cerr << family << (name.empty() ? "" : ":" + name) << " match rate " << rate * 100 << "%\n";
        best = std::max(best, rate);
    }
    if (rates.size() > 1) {
        for (const auto& [name, rate] : rates)
            if (rate >= 0.9) std::cerr << "variant reproducing the stated torsion: " << name << "\n";
    }
    return exit_code(best >= 0.9);
}

// ---- corpus ------------------------------------------------------------------

int cmd_corpus(const Common& c, const std::string& curves_file, const std::string& fields_file) {
    std::vector<std::string> curves, fields;
    if (curves_file.empty()) {
        for (const CorpusCurve& cc : embedded_corpus())
            curves.push_back(std::string(cc.spec) + (cc.label.empty() ? "" : "," + std::string(cc.label)));
    } else {
        curves = read_lines(curves_file);
    }
    if (fields_file.empty()) {
        for (std::string_view f : corpus_fields()) fields.emplace_back(f);
    } else {
        fields = read_lines(fields_file);
    }
    std::vector<Job> jobs;
    for (const std::string& cv : curves)
        for (const std::string& f : fields) jobs.push_back({cv, f});

    auto start = std::chrono::steady_clock::now();
    auto results = parallel_map<JobResult>(jobs.size(), c.jobs, [&](std::size_t i) { return run_job(jobs[i], c.torsion(), c.limit()); });
    Summary sum;
    for (const JobResult& r : results) sum.add(r.status);

    std::ostringstream os;
    if (c.json) {
        Json j;
        j["jobs"] = Json::array();
        for (const JobResult& r : results) j["jobs"].push_back(job_json(r));
        j["summary"] = sum.json();
        os << j.dump(2) << "\n";
    } else {
        if (c.csv) os << "curve,field,galois_type,structure,status\n";
        for (const JobResult& r : results) {
            std::string g = r.report ? std::string(to_string(r.report->galois_type)) : "";
            std::string s = r.report ? pair_text(r.report->structure) : r.message;
            if (c.csv) {
                os << csv_cell(r.job.curve) << ',' << csv_cell(r.job.field) << ',' << g << ',' << csv_cell(s) << ','
                   << to_string(r.status) << "\n";
            } else {
                os << r.job.curve << " | " << r.job.field << " | " << g << " | " << s << " | " << to_string(r.status) << "\n";
            }
        }
        if (!c.csv)
            os << "summary: " << sum.total << " jobs, " << sum.consistent << " consistent, " << sum.inconsistent
               << " inconsistent, " << sum.violations << " violations, " << sum.timeouts << " timeouts, " << sum.errors
               << " errors\n";
    }
    emit(c, os.str());
    for (std::size_t i = 0; i < results.size(); ++i)
        std::cerr << "job " << i << " " << results[i].seconds << " s\n";
    std::cerr << "total " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
    return exit_code(sum.ok());
}

// ---- oracle-compare ------------------------------------------------------------

int cmd_oracle_compare(const Common& c, const std::string& curves_file) {
    std::vector<std::string> curves;
    if (curves_file.empty()) {
        for (const CorpusCurve& cc : embedded_corpus()) curves.emplace_back(cc.spec);
    } else {
        curves = read_lines(curves_file);
    }
    struct Row {
        std::string curve, oracle, engine, error;
        bool agree = false;
    };
    auto rows = parallel_map<Row>(curves.size(), c.jobs, [&](std::size_t i) {
        Row r{curves[i], "", "", "", false};
        try {
            Curve E = parse_curve_spec(curves[i]).curve;
            TorsionOptions o = c.torsion();
            o.deadline = std::chrono::steady_clock::now() + c.limit();
            TorsionStructure a = lutz_nagell_torsion(E).structure;
            TorsionStructure b = torsion_over_field(E, NumberField::rationals(), o).structure;
            r.oracle = pair_text(a);
            r.engine = pair_text(b);
            r.agree = a == b;
        } catch (const std::exception& e) {
            r.error = e.what();
        }
        return r;
    });
    std::size_t agree = 0;
    std::ostringstream os;
    if (c.json) {
        Json j = Json::array();
        for (const Row& r : rows) {
            Json e{{"curve", r.curve}, {"oracle", r.oracle}, {"engine", r.engine}, {"agree", r.agree}};
            if (!r.error.empty()) e["error"] = r.error;
            j.push_back(e);
        }
        os << j.dump(2) << "\n";
    } else {
        if (c.csv) os << "curve,oracle,engine,agree\n";
        for (const Row& r : rows) {
            if (c.csv) {
                os << csv_cell(r.curve) << ',' << csv_cell(r.oracle) << ',' << csv_cell(r.engine) << ',' << (r.agree ? "true" : "false") << "\n";
            } else {
                os << r.curve << " oracle " << r.oracle << " engine " << r.engine << (r.agree ? " agree" : " DISAGREE")
                   << (r.error.empty() ? "" : " error: " + r.error) << "\n";
            }
        }
    }
    for (const Row& r : rows) agree += r.agree;
    if (!c.json && !c.csv) os << agree << "/" << rows.size() << " curves agree\n";
    emit(c, os.str());
    return exit_code(agree == rows.size());
}

// ---- verify-paper ----------------------------------------------------------------

int cmd_verify_paper(const Common& c, const std::vector<std::string>& skips, const std::string& phi_dir) {
    VerifyOptions o;
    o.torsion = c.torsion();
    o.jobs = c.jobs;
    o.timeout = c.limit();
    for (const std::string& s : skips) o.skip.push_back(parse_skip(s));
    if (!phi_dir.empty()) o.phi_dir = phi_dir;

    auto start = std::chrono::steady_clock::now();
    std::vector<SuiteItem> items = run_verify_paper(o);
    auto counts = group_counts(items);
    bool ok = true;
    for (const auto& [g, n] : counts) ok = ok && n.fail == 0;

    std::size_t rows_total = 0, rows_pass = 0, rows_skip = 0;
    for (const SuiteItem& it : items) {
        if (it.group != "table" || it.name.find("published") != std::string::npos) continue;
        ++rows_total;
        rows_pass += it.status == ItemStatus::Pass;
        rows_skip += it.status == ItemStatus::Skip;
    }

    std::ostringstream os;
    if (c.json) {
        Json j;
        j["items"] = Json::array();
        for (const SuiteItem& it : items)
            j["items"].push_back({{"group", it.group},
                                  {"name", it.name},
                                  {"status", to_string(it.status)},
                                  {"expected", it.expected},
                                  {"computed", it.computed},
                                  {"detail", it.detail}});
        Json s = Json::object();
        for (const auto& [g, n] : counts)
            s[g] = {{"pass", std::to_string(n.pass)}, {"fail", std::to_string(n.fail)}, {"skip", std::to_string(n.skip)}};
        j["summary"] = s;
        j["table_rows"] = {{"matched", std::to_string(rows_pass)}, {"total", std::to_string(rows_total)},
                           {"skipped", std::to_string(rows_skip)}};
        os << j.dump(2) << "\n";
    } else {
        for (const SuiteItem& it : items) {
            const bool bulk = it.group == "oracle" || it.group == "invariants";
            if (bulk && it.status == ItemStatus::Pass) continue;
            std::string tag = it.status == ItemStatus::Pass ? "PASS" : it.status == ItemStatus::Fail ? "FAIL" : "SKIP";
            os << tag << " " << it.group << " " << it.name;
            if (it.status != ItemStatus::Skip) os << ": expected " << it.expected << ", computed " << it.computed;
            if (!it.detail.empty() && it.status != ItemStatus::Skip) os << " [" << it.detail << "]";
            os << "\n";
        }
        for (const auto& [g, n] : counts) {
            if (g != "oracle" && g != "invariants") continue;
            os << (n.fail == 0 ? "PASS " : "FAIL ") << g << ": " << n.pass << "/" << n.pass + n.fail << " passed\n";
        }
        os << "table rows: " << rows_pass << "/" << rows_total << " matched";
        if (rows_skip) os << ", " << rows_skip << " skipped";
        os << "\n" << (ok ? "verify-paper: OK" : "verify-paper: FAILED") << "\n";
    }
    emit(c, os.str());
    for (const SuiteItem& it : items)
        if (it.group == "table" || it.group == "fujita") std::cerr << it.name << " " << it.seconds << " s\n";
    std::cerr << "total " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
    return exit_code(ok);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Torsion of elliptic curves over Q in quartic Galois fields", "quartic-torsion"};
    app.require_subcommand(1);
    Common common;

    auto* verify = app.add_subcommand("verify-paper", "reproduce the worked examples and run every invariant suite");
    std::vector<std::string> skips;
    std::string phi_dir;
    add_common(verify, common);
    verify->add_option("--skip", skips, "skip worked examples: a prime p (expected order divisible by p) or row:N");
    verify->add_option("--phi-dir", phi_dir, "directory with phi3.txt and phi5.txt (else $QT_PHI_DIR)");

    auto* torsion = app.add_subcommand("torsion", "torsion of one curve over one field");
    std::string curve, field = "Q";
    add_common(torsion, common);
    torsion->add_option("--curve", curve, "a1,a2,a3,a4,a6[,label]")->required();
    torsion->add_option("--field", field, "field spec");

    auto* fieldcmd = app.add_subcommand("field", "field utilities");
    std::string classify;
    add_common(fieldcmd, common);
    fieldcmd->add_option("--classify", classify, "field spec to classify")->required();

    auto* scan = app.add_subcommand("family-scan", "scan a parametric family");
    std::string family, params, variant = "default";
    long from = 2, to = 1;
    add_common(scan, common);
    scan->add_option("--family", family, "fujita, jkl_4x8, jkl_6x6 or j78608")->required();
    scan->add_option("--from", from, "first integer parameter");
    scan->add_option("--to", to, "last integer parameter");
    scan->add_option("--params", params, "comma-separated rational parameters (overrides --from/--to)");
    scan->add_option("--variant", variant, "default, x_squared, hessian, as_printed or both");

    auto* corpus = app.add_subcommand("corpus", "batch of curves over a batch of fields");
    std::string curves_file, fields_file;
    add_common(corpus, common);
    corpus->add_option("--curves", curves_file, "file with one curve spec per line (default: embedded corpus)");
    corpus->add_option("--fields", fields_file, "file with one field spec per line (default: corpus fields)");

    auto* oracle = app.add_subcommand("oracle-compare", "engine over Q against Lutz-Nagell");
    std::string oracle_file;
    add_common(oracle, common);
    oracle->add_option("--curves", oracle_file, "file with one curve spec per line (default: embedded corpus)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*verify) return cmd_verify_paper(common, skips, phi_dir);
        if (*torsion) return cmd_torsion(common, curve, field);
        if (*fieldcmd) return cmd_field(common, classify);
        if (*scan) return cmd_family_scan(common, family, from, to, params, variant);
        if (*corpus) return cmd_corpus(common, curves_file, fields_file);
        if (*oracle) return cmd_oracle_compare(common, oracle_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
