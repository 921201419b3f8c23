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

#ifndef QTORS_CLI_RUNNER_HPP
#define QTORS_CLI_RUNNER_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qtors/cli/report.hpp"
#include "qtors/ellcurve/curve.hpp"
#include "qtors/numfield/spec.hpp"
#include "qtors/torsion/engine.hpp"

namespace qtors::cli {

/// Runs f(0), …, f(n−1) on `workers` threads; results come back in index order.
template <class R>
std::vector<R> parallel_map(std::size_t n, unsigned workers, const std::function<R(std::size_t)>& f) {
    std::vector<R> out(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

enum class JobStatus { Consistent, Inconsistent, Violation, Timeout, Error };

inline const char* to_string(JobStatus s) {
    switch (s) {
        case JobStatus::Consistent: return "consistent";
        case JobStatus::Inconsistent: return "inconsistent";
        case JobStatus::Violation: return "violation";
        case JobStatus::Timeout: return "timeout";
        case JobStatus::Error: return "error";
    }
    return "?";
}

struct Job {
    std::string curve;  // "a1,a2,a3,a4,a6[,label]"
    std::string field;  // field spec
};

struct JobResult {
    Job job;
    JobStatus status = JobStatus::Error;
    std::optional<TorsionReport> report;
    Verdict verdict;
    std::string message;
    double seconds = 0;
};

/// One (curve, field) computation with its verdict. Never throws.
inline JobResult run_job(const Job& job, TorsionOptions opt, std::chrono::seconds timeout) {
    JobResult r;
    r.job = job;
    auto start = std::chrono::steady_clock::now();
    opt.deadline = start + timeout;
    try {
        CurveSpec cs = parse_curve_spec(job.curve);
        NumberField K = parse_field_spec(job.field);
        TorsionReport rep = torsion_over_field(cs.curve, K, opt);
        rep.label = cs.label;
        r.verdict = report_verdict(rep);
        r.status = r.verdict.consistent ? JobStatus::Consistent : JobStatus::Inconsistent;
        r.report = std::move(rep);
    } catch (const InvariantViolation& e) {
        r.status = JobStatus::Violation;
        r.message = e.what();
    } catch (const Timeout& e) {
        r.status = JobStatus::Timeout;
        r.message = e.what();
    } catch (const std::exception& e) {
        r.status = JobStatus::Error;
        r.message = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline Json job_json(const JobResult& r) {
    Json j;
    j["curve_spec"] = r.job.curve;
    j["field_spec"] = r.job.field;
    j["status"] = to_string(r.status);
    if (r.report) {
        j["report"] = report_json(*r.report);
        j["verdict"] = verdict_json(r.verdict);
    }
    if (!r.message.empty()) j["message"] = r.message;
    return j;
}

struct Summary {
    std::size_t total = 0, consistent = 0, inconsistent = 0, violations = 0, timeouts = 0, errors = 0;
    void add(JobStatus s) {
        ++total;
        switch (s) {
            case JobStatus::Consistent: ++consistent; break;
            case JobStatus::Inconsistent: ++inconsistent; break;
            case JobStatus::Violation: ++violations; break;
            case JobStatus::Timeout: ++timeouts; break;
            case JobStatus::Error: ++errors; break;
        }
    }
    bool ok() const { return inconsistent == 0 && violations == 0 && timeouts == 0 && errors == 0; }
    Json json() const {
        return {{"jobs", std::to_string(total)},          {"consistent", std::to_string(consistent)},
                {"inconsistent", std::to_string(inconsistent)}, {"violations", std::to_string(violations)},
                {"timeouts", std::to_string(timeouts)},   {"errors", std::to_string(errors)}};
    }
};

}  // namespace qtors::cli

#endif  // QTORS_CLI_RUNNER_HPP
