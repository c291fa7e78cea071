#ifndef QEALM_FRAGMENT_HPP
#define QEALM_FRAGMENT_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qealm/logic.hpp"

namespace qealm {

// One failed membership condition for a variable shared by two literals.
// condition 1: the first occurrence positions differ (positions = {p1, p2}).
// condition 2: arguments before the shared first occurrence differ
//              (positions = {j, i}: mismatch at j, first occurrence at i).
struct MembershipViolation {
    int clause = 0;
    std::string variable;
    int lit1 = 0;
    int lit2 = 0;
    int condition = 0;
    std::vector<int> positions;
};

struct Classification {
    std::string kind;  // "SigmaP" or "PiP"
    int level = 0;
};

struct FragmentReport {
    bool member = false;
    std::vector<MembershipViolation> violations;
    std::set<int> fork_indices;
    std::optional<Classification> classification;  // only for member problems with literals
};

struct PositionAnalysis {
    std::vector<std::string> outer_variables;  // in first-occurrence order
    std::set<int> opos;  // least occurrence positions of outer variables
    std::set<int> npos;  // positions i <= min arity holding one fixed
                         // constant-or-outer term in every literal
};

// Every variable shared by two literals must first occur at the same
// position in both, with pairwise equal arguments before that position.
// Violations are reported exhaustively, one per offending literal pair.
FragmentReport check_membership(const Problem& p);

PositionAnalysis position_analysis(const Clause& c);

// Positions that are outer in some clause and neutral in every clause; a
// clause whose literals all lack position i (i > max arity) imposes no
// constraint there.
std::set<int> outer_positions_cnf(const Problem& p);

// Maximal variable-connected blocks of literal indices, ordered by least
// index. Ground literals form singleton blocks.
std::vector<std::vector<int>> components(const Clause& c);

bool inseparable(const Clause& c);

// For every clause and literal pair (self-pairs included): the least i such
// that all variables shared by the pair occur only at positions <= i in both
// literals; 0 when nothing is shared.
std::set<int> fork_indices(const Problem& p);

// SigmaP(2k-1) when 0 is a fork index, else PiP(2k), k = |fork_indices|.
// Requires a member problem with at least one literal.
Classification classify(const Problem& p);

// Error message when the first-argument transform does not apply (some
// predicate is nullary, or a clause mixes first arguments), else nullopt.
std::optional<std::string> first_arg_condition(const Problem& p);

// Keep clauses whose shared first argument equals constant t, instantiate
// clauses whose shared first argument is a variable, drop the rest.
// Throws std::invalid_argument when first_arg_condition fails.
Problem obs1_transform(const Problem& p, const std::string& t);

}  // namespace qealm

#endif
