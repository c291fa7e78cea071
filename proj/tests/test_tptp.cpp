#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <unistd.h>

#include "qealm/fragment.hpp"
#include "qealm/tptp.hpp"
#include "support.hpp"

using namespace qealm;

namespace {

bool has_error(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags)
        if (d.severity == Severity::Error) return true;
    return false;
}

std::multiset<std::string> canonical_clauses(const Problem& p) {
    std::multiset<std::string> out;
    for (const auto& c : p.clauses) out.insert(to_string(canonical_clause(c)));
    return out;
}

struct TempDir {
    std::filesystem::path path;

    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("qealm_tptp_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }

    static int& counter() {
        static int n = 0;
        return n;
    }

    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream out(path / name);
        out << text;
        return (path / name).string();
    }
};

}  // namespace

TEST_CASE("parses clauses, polarity, and term kinds") {
    ParseResult r = parse_tptp("cnf(one, axiom, (p(X) | ~q(X,c1))).\n"
                               "cnf(two, axiom, ~r(c2)).\n");
    REQUIRE(r.ok());
    REQUIRE(r.problem->clauses.size() == 2);
    CHECK(to_string(r.problem->clauses[0]) == "p(X) | ~q(X,c1)");
    CHECK(to_string(r.problem->clauses[1]) == "~r(c2)");
    CHECK(r.problem->signature.at("p") == 1);
    CHECK(r.problem->signature.at("q") == 2);
    CHECK(r.problem->constants == std::set<std::string>{"c1", "c2"});
}

TEST_CASE("underscore-led and upper-case names are variables") {
    ParseResult r = parse_tptp("cnf(c, axiom, p(X, Abc, _u, abc)).");
    REQUIRE(r.ok());
    const Clause& c = r.problem->clauses.front();
    CHECK(c.literals[0].args[0].is_var());
    CHECK(c.literals[0].args[1].is_var());
    CHECK(c.literals[0].args[2].is_var());
    CHECK(c.literals[0].args[3].is_const());
}

TEST_CASE("comments, whitespace, and $false are skipped") {
    ParseResult r = parse_tptp("% leading comment\n"
                               "cnf(one, axiom, /* inline */ ($false | p(c1))).\n");
    REQUIRE(r.ok());
    CHECK(to_string(r.problem->clauses.front()) == "p(c1)");
}

TEST_CASE("double negation cancels") {
    ParseResult r = parse_tptp("cnf(one, axiom, ~~p(c1)).");
    REQUIRE(r.ok());
    CHECK(r.problem->clauses.front().literals.front().positive);
}

TEST_CASE("quoted atoms keep their spelling") {
    ParseResult r = parse_tptp("cnf(one, axiom, 'Weird Pred'('A constant')).");
    REQUIRE(r.ok());
    const Literal& l = r.problem->clauses.front().literals.front();
    CHECK(l.predicate == "Weird Pred");
    CHECK(l.args.front() == cst("A constant"));
}

TEST_CASE("odd roles produce a warning but parse") {
    ParseResult r = parse_tptp("cnf(one, lemma, p(c1)).");
    REQUIRE(r.ok());
    REQUIRE_FALSE(r.diagnostics.empty());
    CHECK(r.diagnostics.front().severity == Severity::Warning);
}

TEST_CASE("rejected inputs") {
    CHECK_FALSE(parse_tptp("fof(one, axiom, ![X]: p(X)).").ok());
    CHECK_FALSE(parse_tptp("cnf(one, axiom, X = c1).").ok());
    CHECK_FALSE(parse_tptp("cnf(one, axiom, p(f(X))).").ok());
    CHECK_FALSE(parse_tptp("cnf(one, axiom, p(42)).").ok());
    CHECK_FALSE(parse_tptp("cnf(one, axiom, p(c1)").ok());
    CHECK_FALSE(parse_tptp("cnf(one, axiom, (p(c1) | q(c1,c2) | p(c1,c1))).").ok());
}

TEST_CASE("arity conflicts are reported with a location") {
    ParseResult r = parse_tptp("cnf(one, axiom, p(c1)).\ncnf(two, axiom, p(c1,c2)).");
    CHECK_FALSE(r.ok());
    REQUIRE(has_error(r.diagnostics));
    bool located = false;
    for (const auto& d : r.diagnostics)
        if (d.severity == Severity::Error && d.line == 2) located = true;
    CHECK(located);
}

TEST_CASE("error recovery continues at the next statement") {
    ParseResult r = parse_tptp("cnf(bad, axiom, p(f(X))).\ncnf(good, axiom, q(c1)).");
    CHECK_FALSE(r.ok());
    CHECK(has_error(r.diagnostics));
}

TEST_CASE("includes resolve against the include directory") {
    TempDir dir;
    dir.write("axioms.p", "cnf(inc, axiom, p(c1)).\n");
    std::string main_path =
        dir.write("main.p", "include('axioms.p').\ncnf(local, axiom, q(c2)).\n");

    ParseResult r = parse_tptp_file(main_path, dir.path.string());
    REQUIRE(r.ok());
    CHECK(r.problem->clauses.size() == 2);

    // The directory of the including file works as a fallback root.
    ParseResult sibling = parse_tptp_file(main_path);
    REQUIRE(sibling.ok());
    CHECK(sibling.problem->clauses.size() == 2);
}

TEST_CASE("a file included twice contributes once") {
    TempDir dir;
    dir.write("axioms.p", "cnf(inc, axiom, p(c1)).\n");
    std::string main_path = dir.write(
        "main.p", "include('axioms.p').\ninclude('axioms.p').\ncnf(local, axiom, q(c2)).\n");
    ParseResult r = parse_tptp_file(main_path, dir.path.string());
    REQUIRE(r.ok());
    CHECK(r.problem->clauses.size() == 2);
}

TEST_CASE("unresolvable includes are an error") {
    ParseResult r = parse_tptp("include('nowhere_to_be_found.p').");
    CHECK_FALSE(r.ok());
    CHECK(has_error(r.diagnostics));
}

TEST_CASE("missing files are an error, not a crash") {
    ParseResult r = parse_tptp_file("/nonexistent/file.p");
    CHECK_FALSE(r.ok());
}

TEST_CASE("write then parse preserves clauses up to variable renaming") {
    for (const Problem& p : {support::pqr_problem(), support::game_problem(),
                             support::game_problem_after_first_move()}) {
        ParseResult r = parse_tptp(write_tptp(p));
        REQUIRE(r.ok());
        CHECK(canonical_clauses(*r.problem) == canonical_clauses(p));
        CHECK(check_membership(*r.problem).member == check_membership(p).member);
        CHECK(fork_indices(*r.problem) == fork_indices(p));
    }
}

TEST_CASE("writer quotes names that need it") {
    Problem p = make_problem({Clause{{Literal{true, "Odd name", {cst("Mixed Case")}}}}});
    std::string text = write_tptp(p);
    CHECK(text.find("'Odd name'") != std::string::npos);
    CHECK(text.find("'Mixed Case'") != std::string::npos);
    ParseResult r = parse_tptp(text);
    REQUIRE(r.ok());
    CHECK(canonical_clauses(*r.problem) == canonical_clauses(p));
}

TEST_CASE("empty clause round trips") {
    Problem p;
    p.clauses.push_back(Clause{});
    ParseResult r = parse_tptp(write_tptp(p));
    REQUIRE(r.ok());
    REQUIRE(r.problem->clauses.size() == 1);
    CHECK(r.problem->clauses.front().empty());
}
