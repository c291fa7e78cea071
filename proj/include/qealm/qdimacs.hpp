#ifndef QEALM_QDIMACS_HPP
#define QEALM_QDIMACS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qealm/logic.hpp"

namespace qealm {

enum class Quantifier { Exists, Forall };

struct QuantifierBlock {
    Quantifier quantifier = Quantifier::Exists;
    std::vector<int> variables;
};

// A closed prenex QBF with a CNF matrix, in DIMACS variable numbering.
// Clauses are literal lists; a negative integer is a negated variable.
struct QbfProblem {
    std::vector<QuantifierBlock> prefix;
    std::vector<std::vector<int>> matrix;

    std::vector<int> variables() const;
    std::size_t variable_count() const;
    bool leading_exists() const;
};

struct QbfParseResult {
    std::optional<QbfProblem> problem;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return problem.has_value(); }
};

// Parses QDIMACS text. Consecutive blocks with the same quantifier are
// merged, and variables that appear in the matrix without a declaration
// are added to an outermost existential block.
QbfParseResult parse_qdimacs(const std::string& text);
QbfParseResult parse_qdimacs_file(const std::string& path);

std::string write_qdimacs(const QbfProblem& qbf);

}  // namespace qealm

#endif
