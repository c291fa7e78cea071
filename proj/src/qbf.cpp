#include "qealm/qbf.hpp"

#include <algorithm>
#include <set>

namespace qealm {

namespace {

std::vector<std::pair<Quantifier, int>> flatten_prefix(const QbfProblem& qbf) {
    std::vector<std::pair<Quantifier, int>> flat;
    for (const QuantifierBlock& block : qbf.prefix)
        for (int v : block.variables) flat.emplace_back(block.quantifier, v);
    return flat;
}

std::set<int> matrix_variables(const QbfProblem& qbf) {
    std::set<int> vars;
    for (const auto& clause : qbf.matrix)
        for (int lit : clause) vars.insert(std::abs(lit));
    return vars;
}

void require_closed(const QbfProblem& qbf) {
    std::set<int> bound;
    for (const QuantifierBlock& block : qbf.prefix)
        bound.insert(block.variables.begin(), block.variables.end());
    for (int v : matrix_variables(qbf))
        if (!bound.count(v))
            throw std::invalid_argument("QBF is not closed: variable " + std::to_string(v) +
                                        " is not quantified");
}

bool tautological(const std::vector<int>& clause) {
    std::set<int> seen(clause.begin(), clause.end());
    for (int lit : clause)
        if (seen.count(-lit)) return true;
    return false;
}

class Expander {
  public:
    explicit Expander(const QbfProblem& qbf) : qbf_(qbf), flat_(flatten_prefix(qbf)) {}

    bool run() {
        for (const auto& [q, v] : flat_) assignment_[v] = false;
        return eval(0);
    }

  private:
    bool eval(std::size_t index) {
        if (index == flat_.size()) return matrix_value();
        auto [q, v] = flat_[index];
        for (bool value : {false, true}) {
            assignment_[v] = value;
            bool sub = eval(index + 1);
            if (q == Quantifier::Exists && sub) return true;
            if (q == Quantifier::Forall && !sub) return false;
        }
        return q == Quantifier::Forall;
    }

    bool matrix_value() const {
        for (const auto& clause : qbf_.matrix) {
            bool satisfied = false;
            for (int lit : clause) {
                bool value = assignment_.at(std::abs(lit));
                if (lit > 0 ? value : !value) {
                    satisfied = true;
                    break;
                }
            }
            if (!satisfied) return false;
        }
        return true;
    }

    const QbfProblem& qbf_;
    std::vector<std::pair<Quantifier, int>> flat_;
    std::map<int, bool> assignment_;
};

}  // namespace

bool qbf_expand(const QbfProblem& qbf, std::size_t max_variables) {
    require_closed(qbf);
    if (qbf.variable_count() > max_variables)
        throw BudgetExceeded("QBF expansion over " + std::to_string(qbf.variable_count()) +
                             " variables exceeds the budget of " +
                             std::to_string(max_variables));
    return Expander(qbf).run();
}

QbfTranslation qbf_to_qealm(const QbfProblem& qbf) {
    require_closed(qbf);

    QbfTranslation out;
    out.meta.encoding = "plain";

    std::map<int, std::vector<int>> universals_before;  // existential -> universal list
    std::vector<int> universals;
    for (const auto& [q, v] : flatten_prefix(qbf)) {
        if (q == Quantifier::Forall) {
            universals.push_back(v);
            out.meta.universal_order[v] = static_cast<int>(universals.size());
        } else {
            universals_before[v] = universals;
            out.meta.predicates[v] = {"p" + std::to_string(v),
                                      static_cast<int>(universals.size())};
        }
    }

    std::vector<Clause> clauses;
    for (const auto& qbf_clause : qbf.matrix) {
        if (tautological(qbf_clause)) continue;
        std::set<int> positive_universals, negative_universals;
        for (int lit : qbf_clause) {
            int v = std::abs(lit);
            if (!universals_before.count(v)) {
                if (lit > 0)
                    positive_universals.insert(v);
                else
                    negative_universals.insert(v);
            }
        }
        Clause clause;
        for (int lit : qbf_clause) {
            int v = std::abs(lit);
            auto deps = universals_before.find(v);
            if (deps == universals_before.end()) continue;
            Literal literal;
            literal.positive = lit > 0;
            literal.predicate = out.meta.predicates.at(v).first;
            for (int u : deps->second) {
                if (positive_universals.count(u))
                    literal.args.push_back(cst("0"));
                else if (negative_universals.count(u))
                    literal.args.push_back(cst("1"));
                else
                    literal.args.push_back(var("u" + std::to_string(u)));
            }
            clause.literals.push_back(std::move(literal));
        }
        clauses.push_back(std::move(clause));
    }

    out.problem = make_problem(std::move(clauses));
    for (const auto& [v, named] : out.meta.predicates)
        out.problem.signature.emplace(named.first, named.second);
    out.problem.constants.insert("0");
    out.problem.constants.insert("1");
    return out;
}

QbfTranslation qbf_to_restricted(const QbfProblem& qbf) {
    require_closed(qbf);

    int next_fresh = 0;
    for (const QuantifierBlock& block : qbf.prefix)
        for (int v : block.variables) next_fresh = std::max(next_fresh, v);
    for (int v : matrix_variables(qbf)) next_fresh = std::max(next_fresh, v);
    ++next_fresh;

    // Pad to the strict shape Ex1 Ay1 Ex2 Ay2 ... Exn Ayn.
    std::vector<std::pair<Quantifier, int>> padded;
    Quantifier expected = Quantifier::Exists;
    for (const auto& entry : flatten_prefix(qbf)) {
        if (entry.first != expected) padded.emplace_back(expected, next_fresh++);
        padded.push_back(entry);
        expected = entry.first == Quantifier::Exists ? Quantifier::Forall : Quantifier::Exists;
    }
    if (padded.size() % 2 == 1) padded.emplace_back(Quantifier::Forall, next_fresh++);

    QbfTranslation out;
    out.meta.encoding = "restricted";
    out.meta.padded_prefix = padded;

    int n = static_cast<int>(padded.size()) / 2;
    int arity = 2 * n + 1;
    std::map<int, int> slot;  // QBF variable -> 1-based argument position
    for (int i = 0; i < 2 * n; ++i) {
        slot[padded[i].second] = i + 1;
        if (padded[i].first == Quantifier::Forall)
            out.meta.universal_order[padded[i].second] = (i + 1) / 2;
        else
            out.meta.predicates[padded[i].second] = {"p", arity};
    }

    // x_k / y_k / z_k variable names by pair index.
    auto xvar = [](int k) { return var("x" + std::to_string(k)); };
    auto yvar = [](int k) { return var("y" + std::to_string(k)); };
    auto zvar = [](int k) { return var("z" + std::to_string(k)); };

    std::vector<Clause> clauses;
    auto emit_equivalence = [&clauses](Literal a, Literal b) {
        Clause forward, backward;
        Literal na = a, nb = b;
        na.positive = false;
        nb.positive = false;
        forward.literals = {na, b};
        backward.literals = {nb, a};
        clauses.push_back(std::move(forward));
        clauses.push_back(std::move(backward));
    };
    auto atom = [arity](std::vector<Term> args) {
        Literal lit;
        lit.positive = true;
        lit.predicate = "p";
        lit.args = std::move(args);
        return lit;
    };

    for (const auto& qbf_clause : qbf.matrix) {
        if (tautological(qbf_clause)) continue;
        std::set<int> positive(qbf_clause.begin(), qbf_clause.end());
        std::vector<Term> args;
        for (int i = 0; i < 2 * n; ++i) {
            int v = padded[i].second;
            if (positive.count(v))
                args.push_back(cst("0"));
            else if (positive.count(-v))
                args.push_back(cst("1"));
            else
                args.push_back(padded[i].first == Quantifier::Exists ? xvar(i / 2 + 1)
                                                                     : yvar(i / 2 + 1));
        }
        std::vector<Term> zero = args, one = args;
        zero.push_back(cst("0"));
        one.push_back(cst("1"));
        emit_equivalence(atom(std::move(zero)), atom(std::move(one)));
    }

    for (int k = 1; k <= n; ++k) {
        std::vector<Term> left, right;
        for (int i = 1; i < k; ++i) {
            left.push_back(xvar(i));
            left.push_back(yvar(i));
            right.push_back(xvar(i));
            right.push_back(yvar(i));
        }
        left.push_back(cst("1"));
        left.push_back(yvar(k));
        right.push_back(cst("0"));
        right.push_back(zvar(k));
        for (int i = k + 1; i <= n; ++i) {
            left.push_back(cst("0"));
            left.push_back(yvar(i));
            right.push_back(cst("1"));
            right.push_back(zvar(i));
        }
        left.push_back(cst("0"));
        right.push_back(cst("1"));
        emit_equivalence(atom(std::move(left)), atom(std::move(right)));
    }

    {
        std::vector<Term> low, high;
        for (int i = 1; i <= n; ++i) {
            low.push_back(cst("0"));
            low.push_back(yvar(i));
            high.push_back(cst("1"));
            high.push_back(yvar(i));
        }
        low.push_back(cst("0"));
        high.push_back(cst("1"));
        Clause positive_unit, negative_unit;
        positive_unit.literals = {atom(std::move(low))};
        Literal negated = atom(std::move(high));
        negated.positive = false;
        negative_unit.literals = {negated};
        clauses.push_back(std::move(positive_unit));
        clauses.push_back(std::move(negative_unit));
    }

    out.problem = make_problem(std::move(clauses));
    out.problem.signature.emplace("p", arity);
    out.problem.constants.insert("0");
    out.problem.constants.insert("1");
    return out;
}

}  // namespace qealm
