#include <CLI11.hpp>

#include <cctype>
#include <iostream>
#include <string>
#include <vector>

#include <semialg/corpus.hpp>

namespace {

using namespace semialg;

int report_error(const std::exception& e, bool as_json) {
    if (as_json) {
        json j;
        const auto* se = dynamic_cast<const error*>(&e);
        j["error"]["code"] = se ? errc_name(se->code()) : "INTERNAL";
        j["error"]["message"] = e.what();
        std::cout << j.dump(2) << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return 3;
}

int exit_code(ProofStatus s) {
    switch (s) {
    case ProofStatus::proved:
    case ProofStatus::proved_generic_closure: return 0;
    case ProofStatus::disproved: return 1;
    case ProofStatus::unknown: return 2;
    }
    return 3;
}

int run_prove(const std::string& file, bool as_json, int depth, const std::string& closure) {
    ParsedProblem pp = parse_problem_file(file);
    if (pp.mode != ProblemMode::prove)
        throw error(errc::conflicting_mode, "'" + file + "' requests classification; use classify");
    pp.problem.options.depth = depth;
    pp.problem.options.closure = closure == "full" ? ClosureMode::full : ClosureMode::generic;
    Verdict v = prove(pp.problem);
    if (as_json) std::cout << verdict_json(pp.problem, v).dump(2) << "\n";
    else std::cout << format_verdict_text(pp.problem, v);
    return exit_code(v.status);
}

int run_classify(const std::string& file, bool as_json) {
    ParsedProblem pp = parse_problem_file(file);
    if (pp.mode != ProblemMode::classify)
        throw error(errc::conflicting_mode, "'" + file + "' requests a proof; use prove");
    ClassificationResult res =
        real_root_classification(pp.system, pp.target, prover_classify_defaults());
    if (as_json) std::cout << classification_json(pp.system, pp.target, res).dump(2) << "\n";
    else std::cout << format_classification_text(pp.system, pp.target, res);
    return 0;
}

int run_isolate(const std::string& text, bool as_json) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < text.size();) {
        unsigned char c = text[i];
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            std::string name = text.substr(i, j - i);
            if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
            i = j;
        } else {
            ++i;
        }
    }
    if (names.size() > 1)
        throw error(errc::bad_input, "isolate expects a univariate polynomial");
    if (names.empty()) names.push_back("x");
    VarOrderPtr ring = make_ring(names);
    Polynomial p = parse_polynomial(text, ring);
    std::vector<RootInterval> roots = isolate_roots(upoly_from(p, 0));
    if (as_json) std::cout << isolation_json(p, roots).dump(2) << "\n";
    else std::cout << format_isolation_text(p, roots);
    return 0;
}

int run_corpus_cmd(const std::string& dir, bool as_json, const CorpusOptions& opt) {
    CorpusReport report = run_corpus(dir, opt);
    if (as_json) std::cout << corpus_json(report).dump(2) << "\n";
    else std::cout << corpus_text(report);
    return report.all_matched ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact real-root classification and polynomial inequality proving"};
    app.require_subcommand(1);

    bool as_json = false;
    int depth = 3;
    std::string closure = "generic";
    unsigned long seed = 0;  // accepted for reproducibility scripting; verdicts ignore it

    std::string prove_file;
    auto* prove_cmd = app.add_subcommand("prove", "prove a goal from a problem file");
    prove_cmd->add_option("file", prove_file, "problem file")->required();
    prove_cmd->add_flag("--json", as_json, "emit JSON");
    prove_cmd->add_option("--depth", depth, "boundary recursion depth");
    prove_cmd->add_option("--closure", closure, "closure mode")
        ->check(CLI::IsMember({"generic", "full"}));
    prove_cmd->add_option("--seed", seed, "randomness seed (never affects the verdict)");

    std::string classify_file;
    auto* classify_cmd =
        app.add_subcommand("classify", "classify real-solution counts over the parameters");
    classify_cmd->add_option("file", classify_file, "problem file")->required();
    classify_cmd->add_flag("--json", as_json, "emit JSON");
    classify_cmd->add_option("--seed", seed, "randomness seed (never affects the result)");

    std::string isolate_text;
    auto* isolate_cmd = app.add_subcommand("isolate", "isolate the real roots of a polynomial");
    isolate_cmd->add_option("poly", isolate_text, "univariate polynomial")->required();
    isolate_cmd->add_flag("--json", as_json, "emit JSON");

    auto* corpus_cmd = app.add_subcommand("corpus", "operate on a directory of problem files");
    corpus_cmd->require_subcommand(1);
    std::string corpus_dir;
    CorpusOptions copt;
    auto* run_cmd = corpus_cmd->add_subcommand("run", "run every problem and check expectations");
    run_cmd->add_option("dir", corpus_dir, "directory of .prob files")->required();
    run_cmd->add_flag("--json", as_json, "emit JSON");
    run_cmd->add_flag("--long", copt.long_run, "include the slow generated instances");
    run_cmd->add_option("--workers", copt.workers, "parallel worker count (0 = auto)");
    run_cmd->add_option("--depth", copt.depth, "boundary recursion depth");
    run_cmd->add_option("--closure", closure, "closure mode")
        ->check(CLI::IsMember({"generic", "full"}));
    run_cmd->add_option("--seed", seed, "randomness seed (never affects verdicts)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (prove_cmd->parsed()) return run_prove(prove_file, as_json, depth, closure);
        if (classify_cmd->parsed()) return run_classify(classify_file, as_json);
        if (isolate_cmd->parsed()) return run_isolate(isolate_text, as_json);
        if (corpus_cmd->parsed()) {
            copt.closure = closure == "full" ? ClosureMode::full : ClosureMode::generic;
            return run_corpus_cmd(corpus_dir, as_json, copt);
        }
    } catch (const std::exception& e) {
        return report_error(e, as_json);
    }
    return 3;
}
