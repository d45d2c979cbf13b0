#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "format.hpp"
#include "problemfile.hpp"

namespace semialg {

struct CorpusOptions {
    bool long_run = false;   // also run the n = 4, 5 cube-sum instances
    unsigned workers = 0;    // 0 picks a small default
    int depth = 3;
    ClosureMode closure = ClosureMode::generic;
};

struct CorpusEntry {
    std::string name;
    std::string status;    // verdict, classification status, or "ERROR"
    std::string expected;  // empty when expected.json has no entry
    bool matched = true;
    double elapsed_ms = 0.0;
    json detail;           // full result object
    json stats;            // small summary
    std::string error;     // message when status == "ERROR"
};

struct CorpusReport {
    std::vector<CorpusEntry> entries;
    bool all_matched = true;
};

namespace detail {

struct CorpusJob {
    std::string name;
    std::string path;  // empty for generated instances
    long ex6_n = 0;    // used when path is empty
};

inline void run_corpus_job(const CorpusJob& job, const CorpusOptions& opt, CorpusEntry& entry) {
    entry.name = job.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (job.path.empty()) {
            Problem p = make_ex6(job.ex6_n);
            p.options.depth = opt.depth;
            p.options.closure = opt.closure;
            Verdict v = prove(p);
            entry.status = proof_status_name(v.status);
            entry.detail = verdict_json(p, v);
            entry.stats["border_factors"] = v.border.factors.size();
            entry.stats["trace_lines"] = v.trace.size();
        } else {
            ParsedProblem pp = parse_problem_file(job.path);
            if (pp.mode == ProblemMode::prove) {
                pp.problem.options.depth = opt.depth;
                pp.problem.options.closure = opt.closure;
                Verdict v = prove(pp.problem);
                entry.status = proof_status_name(v.status);
                entry.detail = verdict_json(pp.problem, v);
                entry.stats["border_factors"] = v.border.factors.size();
                entry.stats["trace_lines"] = v.trace.size();
            } else {
                ClassificationResult res =
                    real_root_classification(pp.system, pp.target, prover_classify_defaults());
                entry.status = res.ambiguous ? "AMBIGUOUS" : "CLASSIFIED";
                entry.detail = classification_json(pp.system, pp.target, res);
                entry.stats["border_factors"] = res.border.factors.size();
                entry.stats["cells"] = res.cells.size();
                entry.stats["uniform"] = res.uniform;
            }
        }
    } catch (const std::exception& e) {
        entry.status = "ERROR";
        entry.error = e.what();
        entry.detail = json(nullptr);
        entry.stats = json::object();
    }
    auto t1 = std::chrono::steady_clock::now();
    entry.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace detail

inline CorpusReport run_corpus(const std::string& dir, const CorpusOptions& opt = {}) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw error(errc::bad_input, "'" + dir + "' is not a directory");

    std::vector<detail::CorpusJob> jobs;
    for (const auto& de : fs::directory_iterator(dir)) {
        if (de.path().extension() == ".prob")
            jobs.push_back({de.path().stem().string(), de.path().string(), 0});
    }
    std::sort(jobs.begin(), jobs.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });
    if (opt.long_run) {
        for (const auto& j : jobs)
            if (j.name == "ex06") {
                jobs.push_back({"ex06_n4", "", 4});
                jobs.push_back({"ex06_n5", "", 5});
                break;
            }
        std::sort(jobs.begin(), jobs.end(),
                  [](const auto& a, const auto& b) { return a.name < b.name; });
    }

    json expected = json::object();
    std::ifstream exf(dir + "/expected.json");
    if (exf) expected = json::parse(exf);

    CorpusReport report;
    report.entries.resize(jobs.size());

    unsigned workers = opt.workers;
    if (workers == 0)
        workers = std::min<unsigned>(4, std::max(1u, std::thread::hardware_concurrency()));
    workers = std::min<unsigned>(workers, std::max<std::size_t>(jobs.size(), 1));

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            detail::run_corpus_job(jobs[i], opt, report.entries[i]);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    for (auto& e : report.entries) {
        if (expected.contains(e.name)) e.expected = expected[e.name].get<std::string>();
        e.matched = e.expected.empty() ? e.status != "ERROR" : e.status == e.expected;
        if (!e.matched) report.all_matched = false;
    }
    return report;
}

inline json corpus_json(const CorpusReport& report, bool include_timing = true) {
    json j;
    j["mode"] = "corpus";
    json arr = json::array();
    for (const auto& e : report.entries) {
        json p;
        p["name"] = e.name;
        p["status"] = e.status;
        p["expected"] = e.expected.empty() ? json(nullptr) : json(e.expected);
        p["matched"] = e.matched;
        if (include_timing) p["elapsed_ms"] = e.elapsed_ms;
        p["stats"] = e.stats;
        p["error"] = e.error.empty() ? json(nullptr) : json(e.error);
        p["detail"] = e.detail;
        arr.push_back(p);
    }
    j["problems"] = arr;
    j["all_matched"] = report.all_matched;
    return j;
}

inline std::string corpus_text(const CorpusReport& report) {
    std::ostringstream os;
    std::size_t matched = 0;
    for (const auto& e : report.entries) {
        os << std::left << std::setw(10) << e.name << std::setw(24) << e.status
           << (e.matched ? "ok      " : "MISMATCH");
        os << std::right << std::fixed << std::setprecision(1) << std::setw(10) << e.elapsed_ms
           << " ms  ";
        if (!e.error.empty()) os << e.error;
        else os << e.stats.dump();
        os << "\n";
        if (e.matched) ++matched;
    }
    os << matched << "/" << report.entries.size() << " matched\n";
    return os.str();
}

} // namespace semialg
