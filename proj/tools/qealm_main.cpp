#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qealm/fragment.hpp"
#include "qealm/generate.hpp"
#include "qealm/logic.hpp"
#include "qealm/qbf.hpp"
#include "qealm/qdimacs.hpp"
#include "qealm/resolution.hpp"
#include "qealm/scan.hpp"
#include "qealm/serialize.hpp"
#include "qealm/solver.hpp"
#include "qealm/tptp.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 2;
constexpr int kExitBudget = 3;

std::optional<std::string> optional_dir(const std::string& dir) {
    if (dir.empty()) return std::nullopt;
    return dir;
}

void print_diagnostics(const std::vector<qealm::Diagnostic>& diagnostics) {
    for (const qealm::Diagnostic& d : diagnostics) {
        std::cerr << (d.severity == qealm::Severity::Error ? "error" : "warning");
        if (d.line > 0) {
            std::cerr << " at line " << d.line;
            if (d.column > 0) std::cerr << ", column " << d.column;
        }
        std::cerr << ": " << d.message << '\n';
    }
}

// Parses and validates a problem file; on failure prints diagnostics and
// returns false so callers can exit with kExitRejected.
bool load_problem(const std::string& path, const std::string& include_dir,
                  qealm::Problem* out) {
    qealm::ParseResult parsed = qealm::parse_tptp_file(path, optional_dir(include_dir));
    print_diagnostics(parsed.diagnostics);
    if (!parsed.ok()) return false;
    std::vector<qealm::Diagnostic> structural = qealm::validate_problem(*parsed.problem);
    print_diagnostics(structural);
    for (const qealm::Diagnostic& d : structural)
        if (d.severity == qealm::Severity::Error) return false;
    *out = *parsed.problem;
    return true;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw std::runtime_error("cannot write " + output_path);
    out << text;
}

std::string describe_trace_step(const qealm::TraceStep& step) {
    std::ostringstream line;
    switch (step.kind) {
        case qealm::TraceStep::Kind::Universal: {
            line << "[universal]";
            for (const auto& [position, constant] : step.position_assignment)
                line << ' ' << position << "->" << constant;
            break;
        }
        case qealm::TraceStep::Kind::Existential: {
            line << "[existential]";
            for (std::size_t i = 0; i < step.component_choice.size(); ++i)
                line << ' ' << i << ":" << step.component_choice[i];
            break;
        }
        case qealm::TraceStep::Kind::Ground:
            line << "[ground leaf]";
            break;
        case qealm::TraceStep::Kind::Empty:
            line << "[empty clause]";
            break;
    }
    return line.str();
}

int run_check(const std::string& path, const std::string& include_dir, bool as_json) {
    qealm::Problem problem;
    if (!load_problem(path, include_dir, &problem)) return kExitRejected;
    qealm::FragmentReport report = qealm::check_membership(problem);
    if (as_json) {
        std::cout << qealm::to_json(report, problem).dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "member: " << (report.member ? "yes" : "no") << '\n';
    for (const qealm::MembershipViolation& v : report.violations)
        std::cout << "  clause " << v.clause << ": variable " << v.variable
                  << " violates condition " << v.condition << " between literals " << v.lit1
                  << " and " << v.lit2 << '\n';
    std::cout << "outer positions:";
    for (int i : qealm::outer_positions_cnf(problem)) std::cout << ' ' << i;
    std::cout << '\n';
    if (report.member) {
        std::cout << "fork indices:";
        for (int i : report.fork_indices) std::cout << ' ' << i;
        std::cout << '\n';
        if (report.classification)
            std::cout << "classification: " << report.classification->kind << '('
                      << report.classification->level << ")\n";
    }
    return kExitOk;
}

int run_classify(const std::string& path, const std::string& include_dir, bool as_json) {
    qealm::Problem problem;
    if (!load_problem(path, include_dir, &problem)) return kExitRejected;
    qealm::FragmentReport report = qealm::check_membership(problem);
    if (!report.member || problem.total_literals() == 0) {
        std::cerr << "problem is outside the fragment or has no literals\n";
        return kExitRejected;
    }
    qealm::Classification classification = qealm::classify(problem);
    if (as_json)
        std::cout << qealm::to_json(classification).dump(2) << '\n';
    else
        std::cout << classification.kind << '(' << classification.level << ")\n";
    return kExitOk;
}

int run_solve(const std::string& path, const std::string& include_dir, bool as_json,
              std::size_t max_depth) {
    qealm::Problem problem;
    if (!load_problem(path, include_dir, &problem)) return kExitRejected;
    if (!qealm::check_membership(problem).member) {
        std::cerr << "problem is outside the fragment\n";
        return kExitRejected;
    }
    qealm::SolveOptions options;
    options.max_depth = max_depth;
    qealm::SolveResult result = qealm::solve_by_alternation(problem, options);
    if (as_json) {
        std::cout << qealm::to_json(result).dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "verdict: " << (result.verdict == qealm::Verdict::Sat ? "SAT" : "UNSAT")
              << '\n';
    for (const qealm::TraceStep& step : result.trace)
        std::cout << "  " << describe_trace_step(step) << '\n';
    if (result.model) {
        std::cout << "model:\n";
        for (const auto& [atom, value] : *result.model)
            std::cout << "  " << atom << " = " << (value ? "true" : "false") << '\n';
    }
    return kExitOk;
}

int run_oracle(const std::string& path, const std::string& include_dir, bool as_json,
               std::size_t budget) {
    qealm::Problem problem;
    if (!load_problem(path, include_dir, &problem)) return kExitRejected;
    qealm::OracleOptions options;
    options.max_instances = budget;
    qealm::OracleResult result = qealm::oracle_solve(problem, options);
    if (as_json) {
        std::cout << qealm::to_json(result).dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "verdict: " << (result.verdict == qealm::Verdict::Sat ? "SAT" : "UNSAT")
              << '\n';
    std::cout << "ground instances: " << result.instances << '\n';
    return kExitOk;
}

int run_translate(const std::string& path, bool restricted, bool as_json,
                  const std::string& output_path) {
    qealm::QbfParseResult parsed = qealm::parse_qdimacs_file(path);
    print_diagnostics(parsed.diagnostics);
    if (!parsed.ok()) return kExitRejected;
    qealm::QbfTranslation translation = restricted ? qealm::qbf_to_restricted(*parsed.problem)
                                                   : qealm::qbf_to_qealm(*parsed.problem);
    std::string tptp = qealm::write_tptp(translation.problem);
    if (as_json) {
        qealm::json out{{"tptp", tptp}, {"meta", qealm::to_json(translation.meta)}};
        emit(out.dump(2) + "\n", output_path);
    } else {
        emit(tptp, output_path);
    }
    return kExitOk;
}

int run_closure(const std::string& path, const std::string& include_dir, bool as_json,
                std::size_t budget, std::size_t attempts) {
    qealm::Problem problem;
    if (!load_problem(path, include_dir, &problem)) return kExitRejected;
    if (!qealm::check_membership(problem).member) {
        std::cerr << "problem is outside the fragment\n";
        return kExitRejected;
    }
    qealm::ClosureReport report = qealm::closure_check(problem, budget, attempts);
    if (as_json) {
        std::cout << qealm::to_json(report).dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "derived clauses: " << report.derived << '\n'
              << "inference attempts: " << report.attempts << '\n'
              << "membership violations: " << report.violations() << '\n'
              << "empty clause derived: " << (report.empty_clause ? "yes" : "no") << '\n'
              << "saturation complete: " << (report.complete ? "yes" : "no") << '\n';
    for (const qealm::Clause& c : report.violating)
        std::cout << "  violates membership: " << qealm::to_string(c) << '\n';
    return kExitOk;
}

int run_obs1(const std::string& path, const std::string& include_dir, bool as_json,
             const std::string& term) {
    qealm::Problem problem;
    if (!load_problem(path, include_dir, &problem)) return kExitRejected;
    std::optional<std::string> blocked = qealm::first_arg_condition(problem);
    if (blocked) {
        std::cerr << *blocked << '\n';
        return kExitRejected;
    }
    qealm::Problem transformed = qealm::obs1_transform(problem, term);
    std::string tptp = qealm::write_tptp(transformed);
    if (as_json) {
        qealm::json out{{"term", term}, {"tptp", tptp}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << tptp;
    }
    return kExitOk;
}

int run_scan(const std::string& root, const std::string& include_dir, bool as_json,
             bool as_csv, int jobs) {
    qealm::ScanReport report = qealm::scan_corpus(root, jobs, include_dir);
    if (as_json) {
        std::cout << qealm::to_json(report).dump(2) << '\n';
        return kExitOk;
    }
    if (as_csv) {
        std::cout << qealm::scan_report_csv(report);
        return kExitOk;
    }
    for (const qealm::ScanRecord& record : report.records) {
        std::cout << record.path << ": ";
        if (!record.parsed)
            std::cout << "parse error";
        else if (!record.epr_legal)
            std::cout << "not EPR";
        else if (!record.member)
            std::cout << "non-member";
        else {
            std::cout << "member, " << record.fork_count << " fork indices";
            if (record.classification)
                std::cout << ", " << record.classification->kind << '('
                          << record.classification->level << ')';
        }
        std::cout << '\n';
    }
    const qealm::ScanSummary& summary = report.summary;
    std::cout << "total: " << summary.total << "  parse errors: " << summary.parse_errors
              << "  EPR: " << summary.epr << "  members: " << summary.member << '\n';
    std::cout << "fork histogram:";
    for (const auto& [bucket, count] : summary.fork_histogram)
        std::cout << "  " << bucket << ": " << count;
    std::cout << '\n';
    return kExitOk;
}

int run_gen(const qealm::GeneratorParams& params, const std::string& output_path) {
    qealm::Problem problem = qealm::generate_random_instance(params);
    emit(qealm::write_tptp(problem), output_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toolkit for a QBF-like fragment of the Bernays-Schonfinkel class"};
    app.require_subcommand(1);

    std::string path, include_dir, output_path, term;
    bool as_json = false, as_csv = false, restricted = false;
    std::size_t oracle_budget = 1000000;
    std::size_t closure_budget = 10000;
    std::size_t closure_attempts = 200000;
    std::size_t max_depth = 0;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    qealm::GeneratorParams params;

    auto add_common = [&](CLI::App* sub, bool with_include = true) {
        sub->add_flag("--json", as_json, "emit JSON");
        if (with_include)
            sub->add_option("--include-dir", include_dir, "directory for TPTP includes");
    };

    CLI::App* check = app.add_subcommand("check", "fragment membership report");
    check->add_option("file", path, "problem file")->required();
    add_common(check);

    CLI::App* classify = app.add_subcommand("classify", "polynomial-hierarchy level");
    classify->add_option("file", path, "problem file")->required();
    add_common(classify);

    CLI::App* solve = app.add_subcommand("solve", "decide satisfiability by alternation");
    solve->add_option("file", path, "problem file")->required();
    solve->add_option("--max-depth", max_depth, "recursion depth override");
    add_common(solve);

    CLI::App* oracle = app.add_subcommand("oracle", "decide satisfiability by grounding");
    oracle->add_option("file", path, "problem file")->required();
    oracle->add_option("--budget", oracle_budget, "ground instance budget");
    add_common(oracle);

    CLI::App* translate = app.add_subcommand("translate-qbf", "QDIMACS to fragment TPTP");
    translate->add_option("file", path, "QDIMACS file")->required();
    translate->add_flag("--restricted", restricted, "Krom/Horn single-predicate encoding");
    translate->add_option("-o,--output", output_path, "output file (default stdout)");
    add_common(translate, false);

    CLI::App* closure = app.add_subcommand("closure-test", "resolution closure check");
    closure->add_option("file", path, "problem file")->required();
    closure->add_option("--budget", closure_budget, "derived clause budget");
    closure->add_option("--attempts", closure_attempts, "inference attempt cap");
    add_common(closure);

    CLI::App* obs1 = app.add_subcommand("obs1", "first-argument instantiation transform");
    obs1->add_option("file", path, "problem file")->required();
    obs1->add_option("--term", term, "ground term to instantiate to")->required();
    add_common(obs1);

    CLI::App* scan = app.add_subcommand("scan", "analyze a directory of problem files");
    scan->add_option("dir", path, "corpus root")->required();
    scan->add_option("--jobs", jobs, "worker count");
    scan->add_flag("--csv", as_csv, "emit CSV");
    add_common(scan);

    CLI::App* gen = app.add_subcommand("gen", "generate a random member problem");
    gen->add_option("--seed", params.seed, "random seed");
    gen->add_option("--constants", params.constants, "constant count");
    gen->add_option("--predicates", params.predicates, "predicate count");
    gen->add_option("--max-arity", params.max_arity, "maximum predicate arity");
    gen->add_option("--clauses", params.clauses, "clause count");
    gen->add_option("--max-literals", params.max_literals, "maximum literals per clause");
    gen->add_option("-o,--output", output_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(check)) return run_check(path, include_dir, as_json);
        if (app.got_subcommand(classify)) return run_classify(path, include_dir, as_json);
        if (app.got_subcommand(solve)) return run_solve(path, include_dir, as_json, max_depth);
        if (app.got_subcommand(oracle))
            return run_oracle(path, include_dir, as_json, oracle_budget);
        if (app.got_subcommand(translate))
            return run_translate(path, restricted, as_json, output_path);
        if (app.got_subcommand(closure))
            return run_closure(path, include_dir, as_json, closure_budget, closure_attempts);
        if (app.got_subcommand(obs1)) return run_obs1(path, include_dir, as_json, term);
        if (app.got_subcommand(scan)) return run_scan(path, include_dir, as_json, as_csv, jobs);
        if (app.got_subcommand(gen)) return run_gen(params, output_path);
    } catch (const qealm::BudgetExceeded& e) {
        std::cerr << "budget refusal: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "rejected: " << e.what() << '\n';
        return kExitRejected;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
