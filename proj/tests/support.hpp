#ifndef QEALM_TESTS_SUPPORT_HPP
#define QEALM_TESTS_SUPPORT_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qealm/logic.hpp"
#include "qealm/qdimacs.hpp"

namespace support {

// Deterministic generator kept separate from the library's so the two
// cannot mask each other's regressions.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    int range(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }

    bool coin() { return below(2) == 0; }
};

qealm::Problem parse_or_die(const std::string& text);

// Exhaustive satisfiability of a ground problem by atom truth tables.
bool truth_table_sat(const qealm::Problem& ground);

// The literal-pair definition applied directly, with no sharing of code
// with the library: for every clause and every pair (i <= j), the bound
// below or at which all shared variables sit in both literals, 0 when
// nothing is shared.
std::set<int> fork_oracle(const qealm::Problem& p);

std::vector<std::string> outer_vars_oracle(const qealm::Clause& c);
std::set<int> opos_oracle(const qealm::Clause& c);
std::set<int> npos_oracle(const qealm::Clause& c);

// Recursive game evaluation of a closed prenex QBF.
bool qbf_truth(const qealm::QbfProblem& q);

qealm::QbfProblem random_qbf(Rng& rng, int max_variables, int max_clauses);

// Random prenex QBF whose blocks strictly alternate starting and ending
// with an existential block, and whose matrix mentions existential
// variables only, at least one per existential block.
qealm::QbfProblem blocky_qbf(Rng& rng, int blocks);

// Unsatisfiable problem over p/1, q/2, r/1 with constants c1, c2 whose
// refutation stays within first argument c1.
qealm::Problem pqr_problem();

// Member problem over x/4, y/4 with constants c1..c3 where the first
// game move is universal over positions {1,2} and the universal player
// wins.
qealm::Problem game_problem();

// The same game position one universal move later, with positions 1 and
// 2 already fixed to c1; clauses split 1 x 2 x 2.
qealm::Problem game_problem_after_first_move();

// Satisfiable sibling of game_problem with every clause inseparable.
qealm::Problem satisfiable_game_problem();

// Variant whose third clause breaks the equal-prefix condition on u3.
qealm::Problem broken_prefix_game_problem();

}  // namespace support

#endif
