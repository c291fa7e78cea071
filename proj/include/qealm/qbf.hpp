#ifndef QEALM_QBF_HPP
#define QEALM_QBF_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qealm/logic.hpp"
#include "qealm/qdimacs.hpp"

namespace qealm {

struct TranslationMeta {
    std::string encoding;  // "plain" or "restricted"
    // existential variable -> emitted predicate and arity
    std::map<int, std::pair<std::string, int>> predicates;
    // universal variable -> 1-based index in prefix order
    std::map<int, int> universal_order;
    // restricted encoding: the strictly alternating padded prefix; fresh
    // padding variables get numbers above the input's maximum
    std::vector<std::pair<Quantifier, int>> padded_prefix;
};

struct QbfTranslation {
    Problem problem;
    TranslationMeta meta;
};

// Truth of a closed prenex QBF by recursive expansion of the prefix.
// Throws BudgetExceeded past max_variables and std::invalid_argument on
// a matrix variable missing from the prefix.
bool qbf_expand(const QbfProblem& qbf, std::size_t max_variables = 20);

// Constants {0,1}; one predicate per existential variable, applied to the
// universals quantified before it. In each non-tautological clause a
// universal's argument slot holds 0 when the universal occurs positively,
// 1 when negatively, else stays a variable; clauses with only universal
// literals become the empty clause.
QbfTranslation qbf_to_qealm(const QbfProblem& qbf);

// Single predicate of arity 2n+1 over a prefix padded to the strict shape
// ExAyExAy...; every equivalence is emitted as two implication clauses, so
// the output is Krom, Horn, and implication-paired.
QbfTranslation qbf_to_restricted(const QbfProblem& qbf);

}  // namespace qealm

#endif
