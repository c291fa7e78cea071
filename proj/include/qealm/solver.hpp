#ifndef QEALM_SOLVER_HPP
#define QEALM_SOLVER_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qealm/logic.hpp"

namespace qealm {

enum class Verdict { Sat, Unsat };

std::string to_string(Verdict v);

// One node on the reported game path. A universal step assigns constants
// to the shared outer positions; an existential step picks one variable
// block per clause; a ground step hands the remaining problem to the
// propositional solver; an empty step hits an empty clause.
struct TraceStep {
    enum class Kind { Universal, Existential, Ground, Empty };
    Kind kind = Kind::Ground;
    std::map<int, std::string> position_assignment;  // universal steps
    std::vector<int> component_choice;               // existential steps, one index per clause
    std::string problem;                             // rendering of the node's problem
};

struct SolveResult {
    Verdict verdict = Verdict::Sat;
    std::vector<TraceStep> trace;
    std::optional<std::map<std::string, bool>> model;  // ground leaf of a Sat path
    std::size_t nodes = 0;                             // game nodes visited
};

struct SolveOptions {
    std::size_t max_depth = 0;  // 0 picks #variables + #literals + 1
    bool want_trace = true;
};

// Decides satisfiability by playing the position game: empty clause loses,
// ground positions go to the propositional solver, positions whose clauses
// are all inseparable branch on every assignment of constants to the shared
// outer positions, and the rest branch on per-clause block selections.
// The trace follows the winner's first winning move at each node.
// Throws std::invalid_argument when the problem is outside the fragment.
SolveResult solve_by_alternation(const Problem& p, const SolveOptions& options = {});

// Propositional satisfiability of a ground problem (unit propagation plus
// chronological backtracking, branching on atoms in first-occurrence
// order). Fills *model with the satisfying assignment when given.
bool sat_ground(const Problem& p, std::map<std::string, bool>* model = nullptr);

struct OracleOptions {
    std::size_t max_instances = 1000000;
};

struct OracleResult {
    Verdict verdict = Verdict::Sat;
    std::size_t instances = 0;  // distinct ground clauses after instantiation
    std::optional<std::map<std::string, bool>> model;
};

// Reference decision procedure: instantiate every clause over the full
// universe and solve the ground problem. Throws BudgetExceeded instead of
// running past options.max_instances.
OracleResult oracle_solve(const Problem& p, const OracleOptions& options = {});

// The substitution a universal assignment induces on one clause: each
// variable occurring at an assigned position is bound to the constant at
// its least such position.
Substitution clause_reduct_substitution(const Clause& c,
                                        const std::map<int, std::string>& assignment);

Problem universal_reduct(const Problem& p, const std::map<int, std::string>& assignment);

// Problem with every clause cut down to one of its variable blocks;
// choice[i] indexes into components(p.clauses[i]).
Problem select_components(const Problem& p, const std::vector<int>& choice);

// All assignments of universe constants to the given positions, ordered
// lexicographically with the first position most significant.
std::vector<std::map<int, std::string>> universal_assignments(
    const std::set<int>& positions, const std::vector<std::string>& universe);

// The same enumeration for the problem's own shared outer positions and
// universe. Throws std::invalid_argument when some clause is separable,
// since only all-inseparable positions take a universal move.
std::vector<std::map<int, std::string>> universal_assignments(const Problem& p);

// All block selections (one component index per clause), odometer order
// with clause 0 most significant.
std::vector<std::vector<int>> component_selections(const Problem& p);

}  // namespace qealm

#endif
