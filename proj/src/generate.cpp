#include "qealm/generate.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qealm {

namespace {

// splitmix64: tiny, platform-stable generator for reproducible corpora.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

}  // namespace

Problem generate_random_instance(const GeneratorParams& params) {
    if (params.constants < 1 || params.predicates < 1 || params.clauses < 1 ||
        params.max_literals < 1 || params.max_arity < 0)
        throw std::invalid_argument("generator bounds must be positive (max arity may be 0)");

    SplitMix64 rng(params.seed);

    std::vector<std::pair<std::string, int>> predicates;
    for (int i = 0; i < params.predicates; ++i) {
        int arity = params.max_arity == 0 ? 0 : rng.range(1, params.max_arity);
        predicates.emplace_back("q" + std::to_string(i + 1), arity);
    }

    auto random_constant = [&rng, &params] {
        return cst("c" + std::to_string(rng.range(1, params.constants)));
    };

    std::vector<Clause> clauses;
    for (int c = 0; c < params.clauses; ++c) {
        int width = rng.range(1, params.max_literals);
        std::vector<int> chosen;
        int min_arity = params.max_arity;
        for (int l = 0; l < width; ++l) {
            int pick = static_cast<int>(rng.below(predicates.size()));
            chosen.push_back(pick);
            min_arity = std::min(min_arity, predicates[pick].second);
        }

        // Shared prefix: every literal starts with these terms, so any
        // variable used by several literals first occurs at one common
        // position behind one common initial segment.
        int prefix_length = min_arity == 0 ? 0 : rng.range(0, min_arity);
        std::vector<Term> prefix;
        std::vector<std::string> shared_vars;
        for (int position = 0; position < prefix_length; ++position) {
            int roll = rng.range(1, 100);
            if (roll <= 50) {
                std::string name = "U" + std::to_string(position + 1);
                shared_vars.push_back(name);
                prefix.push_back(var(name));
            } else if (roll <= 85 || shared_vars.empty()) {
                prefix.push_back(random_constant());
            } else {
                prefix.push_back(
                    var(shared_vars[rng.below(shared_vars.size())]));
            }
        }

        Clause clause;
        for (int l = 0; l < width; ++l) {
            const auto& [name, arity] = predicates[chosen[l]];
            Literal lit;
            lit.positive = rng.below(2) == 0;
            lit.predicate = name;
            lit.args = prefix;
            std::vector<std::string> locals;
            for (int position = prefix_length; position < arity; ++position) {
                int roll = rng.range(1, 100);
                if (roll <= 35) {
                    lit.args.push_back(random_constant());
                } else if (roll <= 70 || (locals.empty() && shared_vars.empty())) {
                    std::string fresh =
                        "W" + std::to_string(l + 1) + "n" + std::to_string(locals.size() + 1);
                    locals.push_back(fresh);
                    lit.args.push_back(var(fresh));
                } else if (roll <= 85 && !locals.empty()) {
                    lit.args.push_back(var(locals[rng.below(locals.size())]));
                } else if (!shared_vars.empty()) {
                    lit.args.push_back(
                        var(shared_vars[rng.below(shared_vars.size())]));
                } else {
                    lit.args.push_back(var(locals[rng.below(locals.size())]));
                }
            }
            clause.literals.push_back(std::move(lit));
        }
        clauses.push_back(std::move(clause));
    }

    Problem problem = make_problem(std::move(clauses));
    for (int i = 1; i <= params.constants; ++i)
        problem.constants.insert("c" + std::to_string(i));
    for (const auto& [name, arity] : predicates) problem.signature.emplace(name, arity);
    return problem;
}

}  // namespace qealm
