#include "qealm/logic.hpp"

#include <algorithm>
#include <sstream>

namespace qealm {

Term var(std::string name) { return Term{TermKind::Variable, std::move(name)}; }
Term cst(std::string name) { return Term{TermKind::Constant, std::move(name)}; }

bool Literal::is_ground() const {
    for (const auto& t : args)
        if (t.is_var()) return false;
    return true;
}

std::vector<std::string> Literal::variables() const {
    std::vector<std::string> out;
    for (const auto& t : args) {
        if (t.is_var() && std::find(out.begin(), out.end(), t.name) == out.end())
            out.push_back(t.name);
    }
    return out;
}

int Literal::first_position(const std::string& v) const {
    for (int i = 0; i < arity(); ++i)
        if (args[i].is_var() && args[i].name == v) return i + 1;
    return 0;
}

int Literal::last_position(const std::string& v) const {
    for (int i = arity() - 1; i >= 0; --i)
        if (args[i].is_var() && args[i].name == v) return i + 1;
    return 0;
}

bool operator<(const Literal& a, const Literal& b) {
    if (a.positive != b.positive) return a.positive < b.positive;
    if (a.predicate != b.predicate) return a.predicate < b.predicate;
    return a.args < b.args;
}

bool Clause::is_ground() const {
    for (const auto& l : literals)
        if (!l.is_ground()) return false;
    return true;
}

std::vector<std::string> Clause::variables() const {
    std::vector<std::string> out;
    for (const auto& l : literals)
        for (const auto& t : l.args) {
            if (t.is_var() && std::find(out.begin(), out.end(), t.name) == out.end())
                out.push_back(t.name);
        }
    return out;
}

int Clause::first_position(const std::string& v) const {
    int best = 0;
    for (const auto& l : literals) {
        int p = l.first_position(v);
        if (p > 0 && (best == 0 || p < best)) best = p;
    }
    return best;
}

int Clause::max_arity() const {
    int m = 0;
    for (const auto& l : literals) m = std::max(m, l.arity());
    return m;
}

int Clause::min_arity() const {
    if (literals.empty()) return 0;
    int m = literals.front().arity();
    for (const auto& l : literals) m = std::min(m, l.arity());
    return m;
}

bool Problem::is_ground() const {
    for (const auto& c : clauses)
        if (!c.is_ground()) return false;
    return true;
}

int Problem::total_literals() const {
    int n = 0;
    for (const auto& c : clauses) n += c.size();
    return n;
}

int Problem::total_variables() const {
    int n = 0;
    for (const auto& c : clauses) n += static_cast<int>(c.variables().size());
    return n;
}

Problem make_problem(std::vector<Clause> clauses) {
    Problem p;
    p.clauses = std::move(clauses);
    for (const auto& c : p.clauses)
        for (const auto& l : c.literals) {
            auto it = p.signature.find(l.predicate);
            if (it == p.signature.end()) p.signature[l.predicate] = l.arity();
            for (const auto& t : l.args)
                if (t.is_const()) p.constants.insert(t.name);
        }
    return p;
}

bool Substitution::is_idempotent() const {
    for (const auto& [v, t] : bindings) {
        (void)v;
        if (t.is_var() && bindings.count(t.name)) return false;
    }
    return true;
}

Term Substitution::operator()(const Term& t) const {
    if (t.is_var()) {
        auto it = bindings.find(t.name);
        if (it != bindings.end()) return it->second;
    }
    return t;
}

Literal apply_substitution(const Literal& lit, const Substitution& s) {
    Literal out = lit;
    for (auto& t : out.args) t = s(t);
    return out;
}

Clause apply_substitution(const Clause& c, const Substitution& s) {
    Clause out = c;
    for (auto& l : out.literals) l = apply_substitution(l, s);
    return out;
}

std::vector<std::string> herbrand_universe(const Problem& p) {
    if (!p.constants.empty())
        return std::vector<std::string>(p.constants.begin(), p.constants.end());
    std::set<std::string> taken;
    for (const auto& [name, arity] : p.signature) {
        (void)arity;
        taken.insert(name);
    }
    for (const auto& c : p.clauses)
        for (const auto& v : c.variables()) taken.insert(v);
    int i = 0;
    std::string fresh = "u0";
    while (taken.count(fresh)) fresh = "u" + std::to_string(++i);
    return {fresh};
}

std::vector<Diagnostic> validate_problem(const Problem& p) {
    std::vector<Diagnostic> out;
    for (int ci = 0; ci < static_cast<int>(p.clauses.size()); ++ci) {
        for (const auto& l : p.clauses[ci].literals) {
            if (l.predicate == "=" || l.predicate == "!=" || l.predicate == "$eq") {
                out.push_back({Severity::Error, "equality predicate is not allowed", 0, 0, ci});
                continue;
            }
            auto it = p.signature.find(l.predicate);
            if (it == p.signature.end()) {
                out.push_back({Severity::Error,
                               "predicate '" + l.predicate + "' missing from signature", 0, 0, ci});
            } else if (it->second != l.arity()) {
                out.push_back({Severity::Error,
                               "predicate '" + l.predicate + "' used with arity " +
                                   std::to_string(l.arity()) + ", declared " +
                                   std::to_string(it->second),
                               0, 0, ci});
            }
            for (const auto& t : l.args)
                if (t.is_const() && !p.constants.count(t.name))
                    out.push_back({Severity::Error,
                                   "constant '" + t.name + "' missing from constant set", 0, 0, ci});
        }
    }
    return out;
}

std::string to_string(const Term& t) { return t.name; }

std::string to_string(const Literal& l) {
    std::ostringstream os;
    if (!l.positive) os << "~";
    os << l.predicate;
    if (!l.args.empty()) {
        os << "(";
        for (int i = 0; i < l.arity(); ++i) {
            if (i) os << ",";
            os << l.args[i].name;
        }
        os << ")";
    }
    return os.str();
}

std::string to_string(const Clause& c) {
    if (c.empty()) return "$false";
    std::ostringstream os;
    for (int i = 0; i < c.size(); ++i) {
        if (i) os << " | ";
        os << to_string(c.literals[i]);
    }
    return os.str();
}

std::string to_string(const Problem& p) {
    std::ostringstream os;
    for (const auto& c : p.clauses) os << to_string(c) << "\n";
    return os.str();
}

Clause canonical_clause(const Clause& c) {
    std::map<std::string, std::string> rename;
    Clause out = c;
    for (auto& l : out.literals)
        for (auto& t : l.args) {
            if (!t.is_var()) continue;
            auto it = rename.find(t.name);
            if (it == rename.end())
                it = rename.emplace(t.name, "v" + std::to_string(rename.size())).first;
            t.name = it->second;
        }
    return out;
}

}  // namespace qealm
