#ifndef QEALM_RESOLUTION_HPP
#define QEALM_RESOLUTION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qealm/logic.hpp"

namespace qealm {

struct UnificationResult {
    bool success = false;
    Substitution unifier;  // on success
    int clash_position = 0;  // on failure: first irreconcilable argument, 1-based
    Term clash_left, clash_right;
};

// Most general unifier of two atoms (polarity ignored), computed as a
// positional union-find: a class unifies to its constant if it has one
// (two distinct constants clash), else to its lexicographically least
// variable. Callers rename variables apart.
UnificationResult mgu(const Literal& a, const Literal& b);

struct InferenceResult {
    Clause clause;
    Substitution unifier;
};

// Binary resolution on c1's literal i and c2's literal j (opposite
// polarity, same predicate). c2 is renamed apart with primed variables
// before unification. Failure (polarity, predicate, or unifier) is a value.
std::optional<InferenceResult> resolve(const Clause& c1, const Clause& c2, int i, int j);

// Factoring: unify same-polarity literals i and j of c, drop literal j.
std::optional<InferenceResult> factor(const Clause& c, int i, int j);

struct Derivation {
    std::vector<std::size_t> parents;  // indices into ClosureReport::clauses
    std::string rule;                  // "input", "resolve", "factor"
    Substitution unifier;
    Clause clause;
};

struct ClosureReport {
    bool complete = false;  // saturation finished within the budgets
    std::size_t derived = 0;  // clauses kept after renaming-dedup, inputs excluded
    std::size_t attempts = 0;  // inference attempts made
    bool empty_clause = false;
    std::vector<Clause> violating;  // derived clauses outside the fragment
    std::vector<Clause> clauses;    // inputs, then derived, in derivation order
    std::vector<Derivation> derivations;

    std::size_t violations() const { return violating.size(); }
};

// Saturates the clause set under resolution and factoring, breadth-first
// in insertion order, deduplicating derived clauses up to variable
// renaming and checking each one for fragment membership. Stops after
// `budget` derived clauses (or an internal attempt cap) and reports the
// exhaustion via complete=false. Throws std::invalid_argument on
// non-member input.
ClosureReport closure_check(const Problem& p, std::size_t budget,
                            std::size_t attempt_cap = 200000);

}  // namespace qealm

#endif
