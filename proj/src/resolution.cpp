#include "qealm/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qealm/fragment.hpp"

namespace qealm {

namespace {

class UnionFind {
  public:
    Term find(Term t) {
        auto it = parent_.find(t);
        if (it == parent_.end()) return t;
        Term root = find(it->second);
        parent_[t] = root;
        return root;
    }

    // Merges the classes of a and b; returns false when that would put two
    // distinct constants into one class.
    bool merge(const Term& a, const Term& b, Term* left, Term* right) {
        Term ra = find(a), rb = find(b);
        if (ra == rb) return true;
        auto ca = constant_.find(ra), cb = constant_.find(rb);
        if (ca != constant_.end() && cb != constant_.end()) {
            *left = ca->second;
            *right = cb->second;
            return false;
        }
        parent_[ra] = rb;
        if (ca != constant_.end()) constant_[rb] = ca->second;
        return true;
    }

    void note(const Term& t) {
        find(t);
        if (t.is_const()) constant_[find(t)] = t;
    }

    std::optional<Term> class_constant(const Term& t) {
        auto it = constant_.find(find(t));
        if (it == constant_.end()) return std::nullopt;
        return it->second;
    }

  private:
    std::map<Term, Term> parent_;
    std::map<Term, Term> constant_;
};

std::set<std::string> clause_variable_set(const Clause& c) {
    std::vector<std::string> vars = c.variables();
    return {vars.begin(), vars.end()};
}

// Renames every variable of c to a primed name avoiding the given set.
Clause rename_apart(const Clause& c, const std::set<std::string>& avoid) {
    Substitution renaming;
    std::set<std::string> used = avoid;
    for (const std::string& v : c.variables()) {
        std::string fresh = v + "'";
        while (used.count(fresh)) fresh += "'";
        used.insert(fresh);
        renaming.bindings[v] = var(fresh);
    }
    return apply_substitution(c, renaming);
}

}  // namespace

UnificationResult mgu(const Literal& a, const Literal& b) {
    UnificationResult result;
    if (a.predicate != b.predicate || a.arity() != b.arity()) return result;

    UnionFind classes;
    for (const Term& t : a.args) classes.note(t);
    for (const Term& t : b.args) classes.note(t);

    for (int i = 0; i < a.arity(); ++i) {
        Term left, right;
        if (!classes.merge(a.args[i], b.args[i], &left, &right)) {
            result.clash_position = i + 1;
            result.clash_left = left;
            result.clash_right = right;
            return result;
        }
    }

    // Representatives: the class constant, else the least variable name.
    std::map<Term, Term> representative;
    std::set<Term> seen;
    for (const Literal* lit : {&a, &b})
        for (const Term& t : lit->args) {
            if (!t.is_var() || !seen.insert(t).second) continue;
            Term root = classes.find(t);
            auto constant = classes.class_constant(t);
            if (constant) {
                representative[root] = *constant;
                continue;
            }
            auto it = representative.find(root);
            if (it == representative.end() || t.name < it->second.name)
                representative[root] = t;
        }

    result.success = true;
    for (const Term& t : seen) {
        Term rep = representative.at(classes.find(t));
        if (rep != t) result.unifier.bindings[t.name] = rep;
    }
    return result;
}

std::optional<InferenceResult> resolve(const Clause& c1, const Clause& c2, int i, int j) {
    if (i < 0 || i >= c1.size() || j < 0 || j >= c2.size()) return std::nullopt;
    Clause renamed = rename_apart(c2, clause_variable_set(c1));
    const Literal& pivot1 = c1.literals[i];
    const Literal& pivot2 = renamed.literals[j];
    if (pivot1.positive == pivot2.positive || pivot1.predicate != pivot2.predicate)
        return std::nullopt;

    UnificationResult unified = mgu(pivot1, pivot2);
    if (!unified.success) return std::nullopt;

    InferenceResult result;
    result.unifier = unified.unifier;
    for (int k = 0; k < c1.size(); ++k)
        if (k != i)
            result.clause.literals.push_back(
                apply_substitution(c1.literals[k], unified.unifier));
    for (int k = 0; k < renamed.size(); ++k)
        if (k != j)
            result.clause.literals.push_back(
                apply_substitution(renamed.literals[k], unified.unifier));
    return result;
}

std::optional<InferenceResult> factor(const Clause& c, int i, int j) {
    if (i < 0 || j < 0 || i >= c.size() || j >= c.size() || i == j) return std::nullopt;
    const Literal& a = c.literals[i];
    const Literal& b = c.literals[j];
    if (a.positive != b.positive || a.predicate != b.predicate) return std::nullopt;

    UnificationResult unified = mgu(a, b);
    if (!unified.success) return std::nullopt;

    InferenceResult result;
    result.unifier = unified.unifier;
    for (int k = 0; k < c.size(); ++k)
        if (k != j)
            result.clause.literals.push_back(
                apply_substitution(c.literals[k], unified.unifier));
    return result;
}

ClosureReport closure_check(const Problem& p, std::size_t budget, std::size_t attempt_cap) {
    if (!check_membership(p).member)
        throw std::invalid_argument("closure check needs a member problem");

    ClosureReport report;
    std::set<std::string> seen;

    auto try_add = [&](const Clause& raw, std::vector<std::size_t> parents,
                       const std::string& rule, const Substitution& unifier) {
        Clause canonical = canonical_clause(raw);
        if (!seen.insert(to_string(canonical)).second) return;
        if (rule != "input") {
            ++report.derived;
            if (!check_membership(make_problem({canonical})).member)
                report.violating.push_back(canonical);
        }
        if (canonical.empty()) report.empty_clause = true;
        report.derivations.push_back({std::move(parents), rule, unifier, canonical});
        report.clauses.push_back(std::move(canonical));
    };

    for (const Clause& c : p.clauses) try_add(c, {}, "input", {});

    bool capped = false;
    for (std::size_t k = 0; k < report.clauses.size() && !capped; ++k) {
        const Clause current = report.clauses[k];

        for (int i = 0; i < current.size() && !capped; ++i)
            for (int j = 0; j < current.size() && !capped; ++j) {
                if (i == j) continue;
                ++report.attempts;
                auto inferred = factor(current, i, j);
                if (inferred) try_add(inferred->clause, {k}, "factor", inferred->unifier);
                capped = report.derived >= budget || report.attempts >= attempt_cap;
            }

        for (std::size_t m = 0; m <= k && !capped; ++m) {
            std::vector<std::pair<std::size_t, std::size_t>> ordered{{m, k}};
            if (m != k) ordered.push_back({k, m});
            for (auto [first, second] : ordered) {
                const Clause left = report.clauses[first];
                const Clause right = report.clauses[second];
                for (int i = 0; i < left.size() && !capped; ++i)
                    for (int j = 0; j < right.size() && !capped; ++j) {
                        ++report.attempts;
                        auto inferred = resolve(left, right, i, j);
                        if (inferred)
                            try_add(inferred->clause, {first, second}, "resolve",
                                    inferred->unifier);
                        capped = report.derived >= budget || report.attempts >= attempt_cap;
                    }
                if (capped) break;
            }
        }
    }

    report.complete = !capped;
    return report;
}

}  // namespace qealm
