#include "qealm/fragment.hpp"

#include <algorithm>
#include <stdexcept>

namespace qealm {

namespace {

std::vector<MembershipViolation> clause_violations(const Clause& c, int clause_index) {
    std::vector<MembershipViolation> out;
    for (const auto& v : c.variables()) {
        std::vector<int> hosts;
        for (int li = 0; li < c.size(); ++li)
            if (c.literals[li].first_position(v) > 0) hosts.push_back(li);
        if (hosts.size() < 2) continue;
        for (size_t a = 0; a < hosts.size(); ++a)
            for (size_t b = a + 1; b < hosts.size(); ++b) {
                const Literal& la = c.literals[hosts[a]];
                const Literal& lb = c.literals[hosts[b]];
                int pa = la.first_position(v);
                int pb = lb.first_position(v);
                if (pa != pb) {
                    out.push_back({clause_index, v, hosts[a], hosts[b], 1, {pa, pb}});
                    continue;
                }
                for (int j = 1; j < pa; ++j) {
                    if (la.args[j - 1] != lb.args[j - 1]) {
                        out.push_back({clause_index, v, hosts[a], hosts[b], 2, {j, pa}});
                        break;
                    }
                }
            }
    }
    return out;
}

}  // namespace

FragmentReport check_membership(const Problem& p) {
    FragmentReport report;
    for (int ci = 0; ci < static_cast<int>(p.clauses.size()); ++ci) {
        auto vs = clause_violations(p.clauses[ci], ci);
        report.violations.insert(report.violations.end(), vs.begin(), vs.end());
    }
    report.member = report.violations.empty();
    report.fork_indices = fork_indices(p);
    if (report.member && p.total_literals() > 0) report.classification = classify(p);
    return report;
}

PositionAnalysis position_analysis(const Clause& c) {
    PositionAnalysis pa;
    if (c.empty()) return pa;
    for (const auto& v : c.variables()) {
        bool everywhere = true;
        for (const auto& l : c.literals)
            if (l.first_position(v) == 0) {
                everywhere = false;
                break;
            }
        if (everywhere) pa.outer_variables.push_back(v);
    }
    for (const auto& v : pa.outer_variables) pa.opos.insert(c.first_position(v));
    std::set<std::string> outer(pa.outer_variables.begin(), pa.outer_variables.end());
    for (int i = 1; i <= c.min_arity(); ++i) {
        const Term& t = c.literals.front().args[i - 1];
        bool same = true;
        for (const auto& l : c.literals)
            if (l.args[i - 1] != t) {
                same = false;
                break;
            }
        if (same && (t.is_const() || outer.count(t.name))) pa.npos.insert(i);
    }
    return pa;
}

std::set<int> outer_positions_cnf(const Problem& p) {
    std::set<int> result;
    std::vector<PositionAnalysis> analyses;
    analyses.reserve(p.clauses.size());
    for (const auto& c : p.clauses) analyses.push_back(position_analysis(c));
    int width = 0;
    for (const auto& c : p.clauses) width = std::max(width, c.max_arity());
    for (int i = 1; i <= width; ++i) {
        bool outer_somewhere = false;
        for (const auto& pa : analyses)
            if (pa.opos.count(i)) {
                outer_somewhere = true;
                break;
            }
        if (!outer_somewhere) continue;
        bool neutral_everywhere = true;
        for (size_t ci = 0; ci < p.clauses.size(); ++ci) {
            if (i > p.clauses[ci].max_arity()) continue;  // position absent, no constraint
            if (!analyses[ci].npos.count(i)) {
                neutral_everywhere = false;
                break;
            }
        }
        if (neutral_everywhere) result.insert(i);
    }
    return result;
}

std::vector<std::vector<int>> components(const Clause& c) {
    int n = c.size();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::vector<std::string>> vars(n);
    for (int i = 0; i < n; ++i) vars[i] = c.literals[i].variables();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool shared = false;
            for (const auto& v : vars[i])
                if (std::find(vars[j].begin(), vars[j].end(), v) != vars[j].end()) {
                    shared = true;
                    break;
                }
            if (shared) parent[find(i)] = find(j);
        }
    std::vector<std::vector<int>> blocks;
    std::map<int, int> root_to_block;
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        auto it = root_to_block.find(r);
        if (it == root_to_block.end()) {
            root_to_block[r] = static_cast<int>(blocks.size());
            blocks.push_back({i});
        } else {
            blocks[it->second].push_back(i);
        }
    }
    return blocks;  // block order follows least literal index
}

bool inseparable(const Clause& c) { return components(c).size() <= 1; }

std::set<int> fork_indices(const Problem& p) {
    std::set<int> out;
    for (const auto& c : p.clauses) {
        for (int i = 0; i < c.size(); ++i)
            for (int j = i; j < c.size(); ++j) {
                const Literal& a = c.literals[i];
                const Literal& b = c.literals[j];
                int fork = 0;
                for (const auto& v : a.variables()) {
                    int pb = b.last_position(v);
                    if (pb == 0) continue;
                    fork = std::max(fork, std::max(a.last_position(v), pb));
                }
                out.insert(fork);
            }
    }
    return out;
}

Classification classify(const Problem& p) {
    auto report_violations = [&] {
        for (const auto& c : p.clauses)
            if (!clause_violations(c, 0).empty()) return true;
        return false;
    };
    if (p.total_literals() == 0)
        throw std::invalid_argument("classify requires at least one literal");
    if (report_violations())
        throw std::invalid_argument("classify requires a member problem");
    auto fork = fork_indices(p);
    int k = static_cast<int>(fork.size());
    if (fork.count(0)) return {"SigmaP", 2 * k - 1};
    return {"PiP", 2 * k};
}

std::optional<std::string> first_arg_condition(const Problem& p) {
    for (const auto& [name, arity] : p.signature)
        if (arity < 1) return "predicate '" + name + "' is nullary";
    for (int ci = 0; ci < static_cast<int>(p.clauses.size()); ++ci) {
        const Clause& c = p.clauses[ci];
        if (c.empty()) continue;
        const Term& t = c.literals.front().args.front();
        for (const auto& l : c.literals)
            if (l.args.front() != t)
                return "clause " + std::to_string(ci) + " mixes first arguments '" + t.name +
                       "' and '" + l.args.front().name + "'";
    }
    return std::nullopt;
}

Problem obs1_transform(const Problem& p, const std::string& t) {
    if (auto err = first_arg_condition(p)) throw std::invalid_argument(*err);
    Problem out;
    out.signature = p.signature;
    out.constants = p.constants;
    out.constants.insert(t);
    for (const auto& c : p.clauses) {
        if (c.empty()) {
            out.clauses.push_back(c);
            continue;
        }
        const Term& head = c.literals.front().args.front();
        if (head.is_const()) {
            if (head.name == t) out.clauses.push_back(c);
            continue;
        }
        Substitution s;
        s.bindings[head.name] = cst(t);
        out.clauses.push_back(apply_substitution(c, s));
    }
    return out;
}

}  // namespace qealm
