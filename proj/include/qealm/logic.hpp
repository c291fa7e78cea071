#ifndef QEALM_LOGIC_HPP
#define QEALM_LOGIC_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qealm {

// Thrown when an operation refuses to run because a configured resource
// budget would be exceeded; a refusal is not a verdict.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Function-free first-order terms: a term is a variable or a constant.
enum class TermKind { Variable, Constant };

struct Term {
    TermKind kind = TermKind::Variable;
    std::string name;

    bool is_var() const { return kind == TermKind::Variable; }
    bool is_const() const { return kind == TermKind::Constant; }

    friend bool operator==(const Term& a, const Term& b) {
        return a.kind == b.kind && a.name == b.name;
    }
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
    friend bool operator<(const Term& a, const Term& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.name < b.name;
    }
};

Term var(std::string name);
Term cst(std::string name);

struct Literal {
    bool positive = true;
    std::string predicate;
    std::vector<Term> args;

    int arity() const { return static_cast<int>(args.size()); }
    bool is_ground() const;
    // Variable names in order of first occurrence, left to right.
    std::vector<std::string> variables() const;
    // 1-indexed position of the first occurrence of v, or 0 if absent.
    int first_position(const std::string& v) const;
    // 1-indexed position of the last occurrence of v, or 0 if absent.
    int last_position(const std::string& v) const;

    friend bool operator==(const Literal& a, const Literal& b) {
        return a.positive == b.positive && a.predicate == b.predicate && a.args == b.args;
    }
    friend bool operator!=(const Literal& a, const Literal& b) { return !(a == b); }
    friend bool operator<(const Literal& a, const Literal& b);
};

// Literals are an ordered list; duplicates are preserved.
struct Clause {
    std::vector<Literal> literals;

    bool empty() const { return literals.empty(); }
    int size() const { return static_cast<int>(literals.size()); }
    bool is_ground() const;
    // Variable names in order of first occurrence across literals.
    std::vector<std::string> variables() const;
    // Least 1-indexed occurrence position of v over all literals, 0 if absent.
    int first_position(const std::string& v) const;
    int max_arity() const;
    int min_arity() const;

    friend bool operator==(const Clause& a, const Clause& b) { return a.literals == b.literals; }
    friend bool operator!=(const Clause& a, const Clause& b) { return !(a == b); }
};

struct Problem {
    std::map<std::string, int> signature;  // predicate name -> arity
    std::set<std::string> constants;
    std::vector<Clause> clauses;

    bool is_ground() const;
    int total_literals() const;
    int total_variables() const;  // summed per clause (variables are clause-local)

    friend bool operator==(const Problem& a, const Problem& b) {
        return a.signature == b.signature && a.constants == b.constants && a.clauses == b.clauses;
    }
};

// Populate signature and constants from the clauses themselves.
Problem make_problem(std::vector<Clause> clauses);

// Idempotent variable -> term binding.
struct Substitution {
    std::map<std::string, Term> bindings;

    bool is_idempotent() const;
    Term operator()(const Term& t) const;
};

Literal apply_substitution(const Literal& lit, const Substitution& s);
Clause apply_substitution(const Clause& c, const Substitution& s);

// All constants sorted by name; a constant-free problem yields one fresh
// constant ("u0", numeric suffix bumped until it collides with no symbol).
std::vector<std::string> herbrand_universe(const Problem& p);

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string message;
    int line = 0;        // 0 when not tied to a source location
    int column = 0;
    int clause_index = -1;  // -1 when not tied to a clause
};

// Structural checks: arity consistency with the signature, declared
// constants, equality predicates. Empty result == EPR-legal problem.
std::vector<Diagnostic> validate_problem(const Problem& p);

std::string to_string(const Term& t);
std::string to_string(const Literal& l);
std::string to_string(const Clause& c);
std::string to_string(const Problem& p);

// Clause with variables renamed to v0, v1, ... by first occurrence; two
// clauses are equal up to renaming iff their canonical forms are equal.
Clause canonical_clause(const Clause& c);

}  // namespace qealm

#endif
