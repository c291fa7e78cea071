#include "support.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qealm/tptp.hpp"

namespace support {

using qealm::Clause;
using qealm::cst;
using qealm::Literal;
using qealm::Problem;
using qealm::QbfProblem;
using qealm::Quantifier;
using qealm::QuantifierBlock;
using qealm::Term;
using qealm::var;

Problem parse_or_die(const std::string& text) {
    qealm::ParseResult r = qealm::parse_tptp(text);
    if (!r.ok()) {
        std::string what = "parse failed:";
        for (const auto& d : r.diagnostics) what += " " + d.message;
        throw std::runtime_error(what);
    }
    return *r.problem;
}

namespace {

std::string atom_key(const Literal& l) {
    std::string key = l.predicate;
    key += '(';
    for (const Term& t : l.args) {
        key += t.name;
        key += ',';
    }
    key += ')';
    return key;
}

}  // namespace

bool truth_table_sat(const Problem& ground) {
    std::map<std::string, int> index;
    for (const Clause& c : ground.clauses)
        for (const Literal& l : c.literals)
            index.emplace(atom_key(l), static_cast<int>(index.size()));
    if (index.size() > 24) throw std::runtime_error("truth table too large");
    std::uint64_t combinations = 1ULL << index.size();
    for (std::uint64_t mask = 0; mask < combinations; ++mask) {
        bool all = true;
        for (const Clause& c : ground.clauses) {
            bool clause = false;
            for (const Literal& l : c.literals) {
                bool value = (mask >> index.at(atom_key(l))) & 1;
                if (value == l.positive) {
                    clause = true;
                    break;
                }
            }
            if (!clause) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

std::set<int> fork_oracle(const Problem& p) {
    std::set<int> out;
    for (const Clause& c : p.clauses)
        for (int i = 0; i < c.size(); ++i)
            for (int j = i; j < c.size(); ++j) {
                const Literal& a = c.literals[i];
                const Literal& b = c.literals[j];
                int bound = 0;
                for (int pa = 0; pa < a.arity(); ++pa) {
                    if (!a.args[pa].is_var()) continue;
                    for (int pb = 0; pb < b.arity(); ++pb) {
                        if (!b.args[pb].is_var() || b.args[pb].name != a.args[pa].name) continue;
                        bound = std::max(bound, std::max(pa, pb) + 1);
                    }
                }
                out.insert(bound);
            }
    return out;
}

std::vector<std::string> outer_vars_oracle(const Clause& c) {
    std::vector<std::string> out;
    for (const std::string& v : c.variables()) {
        bool everywhere = true;
        for (const Literal& l : c.literals) {
            bool present = false;
            for (const Term& t : l.args)
                if (t.is_var() && t.name == v) present = true;
            if (!present) everywhere = false;
        }
        if (everywhere) out.push_back(v);
    }
    return out;
}

std::set<int> opos_oracle(const Clause& c) {
    std::set<int> out;
    for (const std::string& v : outer_vars_oracle(c)) {
        int least = 0;
        for (const Literal& l : c.literals)
            for (int i = 0; i < l.arity(); ++i)
                if (l.args[i].is_var() && l.args[i].name == v && (least == 0 || i + 1 < least))
                    least = i + 1;
        out.insert(least);
    }
    return out;
}

std::set<int> npos_oracle(const Clause& c) {
    std::set<int> out;
    if (c.empty()) return out;
    std::vector<std::string> outer = outer_vars_oracle(c);
    for (int i = 1; i <= c.min_arity(); ++i) {
        const Term& t = c.literals.front().args[i - 1];
        bool shared = true;
        for (const Literal& l : c.literals)
            if (!(l.args[i - 1] == t)) shared = false;
        bool eligible = t.is_const() ||
                        std::find(outer.begin(), outer.end(), t.name) != outer.end();
        if (shared && eligible) out.insert(i);
    }
    return out;
}

namespace {

bool matrix_true(const QbfProblem& q, const std::map<int, bool>& assignment) {
    for (const auto& clause : q.matrix) {
        bool satisfied = false;
        for (int lit : clause) {
            bool value = assignment.at(std::abs(lit));
            if (value == (lit > 0)) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied) return false;
    }
    return true;
}

bool prefix_truth(const QbfProblem& q,
                  const std::vector<std::pair<Quantifier, int>>& order, std::size_t at,
                  std::map<int, bool>& assignment) {
    if (at == order.size()) return matrix_true(q, assignment);
    auto [quantifier, variable] = order[at];
    for (bool value : {false, true}) {
        assignment[variable] = value;
        bool sub = prefix_truth(q, order, at + 1, assignment);
        if (quantifier == Quantifier::Exists && sub) return true;
        if (quantifier == Quantifier::Forall && !sub) return false;
    }
    return quantifier == Quantifier::Forall;
}

}  // namespace

bool qbf_truth(const QbfProblem& q) {
    std::vector<std::pair<Quantifier, int>> order;
    for (const auto& block : q.prefix)
        for (int v : block.variables) order.emplace_back(block.quantifier, v);
    std::map<int, bool> assignment;
    return prefix_truth(q, order, 0, assignment);
}

QbfProblem random_qbf(Rng& rng, int max_variables, int max_clauses) {
    QbfProblem q;
    int variables = rng.range(1, max_variables);
    for (int v = 1; v <= variables; ++v) {
        Quantifier kind = rng.coin() ? Quantifier::Exists : Quantifier::Forall;
        if (q.prefix.empty() || q.prefix.back().quantifier != kind)
            q.prefix.push_back({kind, {}});
        q.prefix.back().variables.push_back(v);
    }
    int clauses = rng.range(1, max_clauses);
    for (int c = 0; c < clauses; ++c) {
        std::vector<int> clause;
        int width = rng.range(1, 3);
        for (int l = 0; l < width; ++l) {
            int v = rng.range(1, variables);
            clause.push_back(rng.coin() ? v : -v);
        }
        q.matrix.push_back(std::move(clause));
    }
    return q;
}

QbfProblem blocky_qbf(Rng& rng, int blocks) {
    QbfProblem q;
    Quantifier kind = blocks % 2 == 1 ? Quantifier::Exists : Quantifier::Forall;
    int next_variable = 1;
    for (int b = 0; b < blocks; ++b) {
        QuantifierBlock block;
        block.quantifier = kind;
        int size = rng.range(1, 2);
        for (int i = 0; i < size; ++i) block.variables.push_back(next_variable++);
        q.prefix.push_back(std::move(block));
        kind = kind == Quantifier::Exists ? Quantifier::Forall : Quantifier::Exists;
    }
    for (const auto& block : q.prefix) {
        if (block.quantifier != Quantifier::Exists) continue;
        std::vector<int> clause;
        for (int v : block.variables)
            if (clause.empty() || rng.coin()) clause.push_back(rng.coin() ? v : -v);
        q.matrix.push_back(std::move(clause));
    }
    return q;
}

Problem pqr_problem() {
    Clause c1{{Literal{true, "p", {var("X")}}, Literal{false, "q", {var("X"), cst("c1")}}}};
    Clause c2{{Literal{false, "p", {var("X")}}, Literal{false, "q", {var("X"), cst("c2")}}}};
    Clause c3{{Literal{false, "r", {var("X")}}}};
    Clause c4{{Literal{true, "q", {cst("c1"), var("Y")}}, Literal{true, "r", {cst("c1")}}}};
    Clause c5{{Literal{true, "q", {cst("c2"), cst("c1")}}}};
    return qealm::make_problem({c1, c2, c3, c4, c5});
}

Problem game_problem() {
    Clause a{{Literal{true, "y", {var("U1"), var("U2"), var("U3"), var("U4")}}}};
    Clause b{{Literal{true, "x", {var("U1"), cst("c1"), var("U3"), var("U3")}},
              Literal{false, "y", {var("U1"), cst("c1"), var("U3P"), var("U4")}}}};
    Clause b2{{Literal{false, "x", {var("U1"), cst("c1"), var("U3"), var("U1")}},
               Literal{false, "y", {var("U1"), cst("c1"), var("U3P"), cst("c3")}}}};
    Clause c{{Literal{false, "x", {var("U1"), var("U2"), var("U3"), cst("c3")}},
              Literal{false, "y", {var("U1"), var("U2"), var("U3"), var("U4")}},
              Literal{true, "x", {var("U1"), var("U2"), cst("c2"), var("U1")}}}};
    return qealm::make_problem({a, b, b2, c});
}

Problem game_problem_after_first_move() {
    Clause a{{Literal{true, "y", {cst("c1"), cst("c1"), var("U3"), var("U4")}}}};
    Clause b{{Literal{true, "x", {cst("c1"), cst("c1"), var("U3"), var("U3")}},
              Literal{false, "y", {cst("c1"), cst("c1"), var("U3"), var("U4")}},
              Literal{false, "x", {cst("c1"), cst("c1"), var("U3P"), cst("c1")}}}};
    Clause c{{Literal{false, "x", {cst("c1"), cst("c1"), var("U3"), cst("c3")}},
              Literal{false, "y", {cst("c1"), cst("c1"), var("U3"), var("U4")}},
              Literal{true, "x", {cst("c1"), cst("c1"), cst("c2"), cst("c1")}}}};
    return qealm::make_problem({a, b, c});
}

Problem satisfiable_game_problem() {
    Clause a{{Literal{true, "y", {var("U1"), var("U2"), var("U3"), var("U4")}}}};
    Clause b{{Literal{true, "x", {var("U1"), cst("c1"), var("U3"), var("U3")}},
              Literal{false, "y", {var("U1"), cst("c1"), var("U3"), var("U4")}},
              Literal{false, "x", {var("U1"), cst("c1"), var("U3P"), var("U1")}}}};
    Clause c{{Literal{false, "x", {var("U1"), var("U1"), var("U3"), cst("c3")}},
              Literal{false, "y", {var("U1"), var("U1"), var("U3"), var("U4")}},
              Literal{true, "x", {var("U1"), var("U2"), cst("c2"), var("U1")}}}};
    return qealm::make_problem({a, b, c});
}

Problem broken_prefix_game_problem() {
    Problem p = satisfiable_game_problem();
    p.clauses[2].literals[1].args[1] = var("U2");
    return p;
}

}  // namespace support
