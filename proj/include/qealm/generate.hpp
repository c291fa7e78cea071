#ifndef QEALM_GENERATE_HPP
#define QEALM_GENERATE_HPP

#include <cstdint>

#include "qealm/logic.hpp"

namespace qealm {

struct GeneratorParams {
    std::uint64_t seed = 1;
    int constants = 2;
    int predicates = 2;
    int max_arity = 2;
    int clauses = 3;
    int max_literals = 2;
};

// Seeded random member problem: each clause samples a shared argument
// prefix (constants and fresh shared variables) that every literal starts
// with, then forks into per-literal tails of local variables, repeats, and
// constants. Identical parameters give identical output on any platform.
// Throws std::invalid_argument on non-positive bounds (max_arity may be 0,
// which yields a ground propositional problem).
Problem generate_random_instance(const GeneratorParams& params);

}  // namespace qealm

#endif
