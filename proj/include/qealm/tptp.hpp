#ifndef QEALM_TPTP_HPP
#define QEALM_TPTP_HPP

#include <optional>
#include <string>
#include <vector>

#include "qealm/logic.hpp"

namespace qealm {

struct ParseResult {
    std::optional<Problem> problem;  // present iff no error diagnostics
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return problem.has_value(); }
};

// CNF subset of TPTP: cnf(name, role, formula). statements, %-comments and
// include('file'). directives. Uppercase identifiers are variables, lowercase
// or quoted identifiers are constants. fof/tff inputs, equality, functions
// and numbers are rejected with diagnostics. Roles axiom, hypothesis and
// negated_conjecture are equivalent; other roles warn and are included.
// $false literals are dropped; a clause of only $false is the empty clause.
// Includes resolve against include_dir, then the TPTP environment variable,
// then base_dir (the including file's directory).
ParseResult parse_tptp(const std::string& text,
                       const std::optional<std::string>& include_dir = std::nullopt,
                       const std::optional<std::string>& base_dir = std::nullopt);

ParseResult parse_tptp_file(const std::string& path,
                            const std::optional<std::string>& include_dir = std::nullopt);

// Clause-locally renames variables to X0, X1, ... in first-occurrence order;
// parse_tptp(write_tptp(p)) is isomorphic to p up to that renaming.
std::string write_tptp(const Problem& p);

}  // namespace qealm

#endif
