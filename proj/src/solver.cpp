#include "qealm/solver.hpp"

#include <algorithm>
#include <sstream>

#include "qealm/fragment.hpp"

namespace qealm {

std::string to_string(Verdict v) { return v == Verdict::Sat ? "sat" : "unsat"; }

namespace {

// Mixed-radix counter; digit 0 is the most significant.
struct Odometer {
    std::vector<std::size_t> radix;
    std::vector<std::size_t> digits;
    bool done = false;

    explicit Odometer(std::vector<std::size_t> r) : radix(std::move(r)), digits(radix.size(), 0) {
        for (std::size_t base : radix)
            if (base == 0) done = true;
    }

    void advance() {
        for (std::size_t i = digits.size(); i-- > 0;) {
            if (++digits[i] < radix[i]) return;
            digits[i] = 0;
        }
        done = true;
    }
};

std::string atom_name(const Literal& lit) {
    std::string name = lit.predicate;
    if (!lit.args.empty()) {
        name += '(';
        for (std::size_t i = 0; i < lit.args.size(); ++i) {
            if (i) name += ',';
            name += lit.args[i].name;
        }
        name += ')';
    }
    return name;
}

class GroundSolver {
  public:
    // Returns false on an empty clause; tautologies are dropped.
    bool add_clause(const Clause& c) {
        std::vector<int> lits;
        std::set<int> seen;
        for (const Literal& lit : c.literals) {
            int code = intern(lit) + 1;
            if (!lit.positive) code = -code;
            if (seen.count(-code)) return true;
            if (!seen.insert(code).second) continue;
            lits.push_back(code);
        }
        if (lits.empty()) return false;
        std::size_t index = clauses_.size();
        for (int code : lits) occurrences(code).push_back(index);
        unassigned_.push_back(static_cast<int>(lits.size()));
        satisfied_.push_back(0);
        clauses_.push_back(std::move(lits));
        return true;
    }

    bool solve() {
        value_.assign(names_.size(), -1);
        trail_.clear();
        std::vector<int> units;
        for (const auto& clause : clauses_)
            if (clause.size() == 1) units.push_back(clause[0]);
        for (int code : units)
            if (!assign_and_propagate(code)) return false;
        return search(0);
    }

    std::map<std::string, bool> model() const {
        std::map<std::string, bool> m;
        for (std::size_t i = 0; i < names_.size(); ++i) m[names_[i]] = value_[i] == 1;
        return m;
    }

  private:
    int intern(const Literal& lit) {
        std::string name = atom_name(lit);
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        int id = static_cast<int>(names_.size());
        index_.emplace(std::move(name), id);
        names_.push_back(atom_name(lit));
        pos_occ_.emplace_back();
        neg_occ_.emplace_back();
        return id;
    }

    std::vector<std::size_t>& occurrences(int code) {
        return code > 0 ? pos_occ_[code - 1] : neg_occ_[-code - 1];
    }

    bool assign_and_propagate(int code) {
        std::vector<int> queue{code};
        while (!queue.empty()) {
            int lit = queue.back();
            queue.pop_back();
            int atom = std::abs(lit) - 1;
            signed char want = lit > 0 ? 1 : 0;
            if (value_[atom] != -1) {
                if (value_[atom] != want) return false;
                continue;
            }
            value_[atom] = want;
            trail_.push_back(atom);
            const auto& same = lit > 0 ? pos_occ_[atom] : neg_occ_[atom];
            const auto& other = lit > 0 ? neg_occ_[atom] : pos_occ_[atom];
            for (std::size_t idx : same) ++satisfied_[idx];
            for (std::size_t idx : other) {
                if (--unassigned_[idx] > 1 || satisfied_[idx] > 0) continue;
                if (unassigned_[idx] == 0) return false;
                for (int candidate : clauses_[idx]) {
                    int a = std::abs(candidate) - 1;
                    if (value_[a] == -1) {
                        queue.push_back(candidate);
                        break;
                    }
                }
            }
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            int atom = trail_.back();
            trail_.pop_back();
            bool was_true = value_[atom] == 1;
            value_[atom] = -1;
            const auto& same = was_true ? pos_occ_[atom] : neg_occ_[atom];
            const auto& other = was_true ? neg_occ_[atom] : pos_occ_[atom];
            for (std::size_t idx : same) --satisfied_[idx];
            for (std::size_t idx : other) ++unassigned_[idx];
        }
    }

    bool search(std::size_t from) {
        while (from < value_.size() && value_[from] != -1) ++from;
        if (from == value_.size()) return true;
        int atom = static_cast<int>(from);
        for (int code : {atom + 1, -(atom + 1)}) {
            std::size_t mark = trail_.size();
            if (assign_and_propagate(code) && search(from + 1)) return true;
            undo_to(mark);
        }
        return false;
    }

    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> clauses_;
    std::vector<std::vector<std::size_t>> pos_occ_, neg_occ_;
    std::vector<int> unassigned_;
    std::vector<int> satisfied_;
    std::vector<signed char> value_;
    std::vector<int> trail_;
};

unsigned long long pow_saturating(unsigned long long base, std::size_t exp,
                                  unsigned long long cap) {
    unsigned long long result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && result > cap / base) return cap + 1;
        result *= base;
    }
    return result;
}

class GameSolver {
  public:
    GameSolver(std::size_t depth_limit, bool want_trace)
        : depth_limit_(depth_limit), want_trace_(want_trace) {}

    std::size_t nodes = 0;

    Verdict play(const Problem& p, std::size_t depth, std::vector<TraceStep>* path,
                 std::map<std::string, bool>* model) {
        ++nodes;
        if (depth > depth_limit_)
            throw std::logic_error("alternation depth limit exceeded");
        if (!check_membership(p).member)
            throw std::logic_error("game position left the fragment");

        for (const Clause& c : p.clauses)
            if (c.empty()) {
                record(path, TraceStep::Kind::Empty, p);
                return Verdict::Unsat;
            }

        if (p.is_ground()) {
            record(path, TraceStep::Kind::Ground, p);
            std::map<std::string, bool> m;
            bool sat = sat_ground(p, &m);
            if (sat && model) *model = std::move(m);
            return sat ? Verdict::Sat : Verdict::Unsat;
        }

        bool all_inseparable = std::all_of(p.clauses.begin(), p.clauses.end(),
                                           [](const Clause& c) { return inseparable(c); });
        return all_inseparable ? play_universal(p, depth, path, model)
                               : play_existential(p, depth, path, model);
    }

  private:
    void record(std::vector<TraceStep>* path, TraceStep::Kind kind, const Problem& p) {
        if (!path || !want_trace_) return;
        TraceStep step;
        step.kind = kind;
        step.problem = to_string(p);
        path->push_back(std::move(step));
    }

    Verdict play_universal(const Problem& p, std::size_t depth, std::vector<TraceStep>* path,
                           std::map<std::string, bool>* model) {
        std::set<int> opos = outer_positions_cnf(p);
        if (opos.empty())
            throw std::logic_error("inseparable non-ground position has no outer positions");
        std::vector<int> positions(opos.begin(), opos.end());
        std::vector<std::string> universe = herbrand_universe(p);

        std::vector<TraceStep> first_path;
        std::map<std::string, bool> first_model;
        std::map<int, std::string> first_assignment;
        bool have_first = false;

        Odometer odometer(std::vector<std::size_t>(positions.size(), universe.size()));
        while (!odometer.done) {
            std::map<int, std::string> assignment;
            for (std::size_t i = 0; i < positions.size(); ++i)
                assignment[positions[i]] = universe[odometer.digits[i]];

            Problem child = universal_reduct(p, assignment);
            if (child.total_variables() >= p.total_variables())
                throw std::logic_error("universal move bound no variable");

            std::vector<TraceStep> sub;
            std::map<std::string, bool> m;
            Verdict v = play(child, depth + 1, path ? &sub : nullptr, &m);
            if (v == Verdict::Unsat) {
                append_universal(path, p, assignment, sub);
                return Verdict::Unsat;
            }
            if (!have_first) {
                have_first = true;
                first_path = std::move(sub);
                first_model = std::move(m);
                first_assignment = std::move(assignment);
            }
            odometer.advance();
        }

        append_universal(path, p, first_assignment, first_path);
        if (model) *model = std::move(first_model);
        return Verdict::Sat;
    }

    Verdict play_existential(const Problem& p, std::size_t depth, std::vector<TraceStep>* path,
                             std::map<std::string, bool>* model) {
        std::vector<std::size_t> radix;
        radix.reserve(p.clauses.size());
        for (const Clause& c : p.clauses) radix.push_back(components(c).size());

        std::vector<TraceStep> first_path;
        std::vector<int> first_choice;
        bool have_first = false;

        Odometer odometer(std::move(radix));
        while (!odometer.done) {
            std::vector<int> choice(odometer.digits.begin(), odometer.digits.end());
            Problem child = select_components(p, choice);

            std::vector<TraceStep> sub;
            std::map<std::string, bool> m;
            Verdict v = play(child, depth + 1, path ? &sub : nullptr, &m);
            if (v == Verdict::Sat) {
                append_existential(path, p, choice, sub);
                if (model) *model = std::move(m);
                return Verdict::Sat;
            }
            if (!have_first) {
                have_first = true;
                first_path = std::move(sub);
                first_choice = std::move(choice);
            }
            odometer.advance();
        }

        append_existential(path, p, first_choice, first_path);
        return Verdict::Unsat;
    }

    void append_universal(std::vector<TraceStep>* path, const Problem& p,
                          const std::map<int, std::string>& assignment,
                          std::vector<TraceStep>& sub) {
        if (!path || !want_trace_) return;
        TraceStep step;
        step.kind = TraceStep::Kind::Universal;
        step.position_assignment = assignment;
        step.problem = to_string(p);
        path->push_back(std::move(step));
        path->insert(path->end(), std::make_move_iterator(sub.begin()),
                     std::make_move_iterator(sub.end()));
    }

    void append_existential(std::vector<TraceStep>* path, const Problem& p,
                            const std::vector<int>& choice, std::vector<TraceStep>& sub) {
        if (!path || !want_trace_) return;
        TraceStep step;
        step.kind = TraceStep::Kind::Existential;
        step.component_choice = choice;
        step.problem = to_string(p);
        path->push_back(std::move(step));
        path->insert(path->end(), std::make_move_iterator(sub.begin()),
                     std::make_move_iterator(sub.end()));
    }

    std::size_t depth_limit_;
    bool want_trace_;
};

}  // namespace

bool sat_ground(const Problem& p, std::map<std::string, bool>* model) {
    if (!p.is_ground()) throw std::invalid_argument("sat_ground needs a ground problem");
    GroundSolver solver;
    for (const Clause& c : p.clauses)
        if (!solver.add_clause(c)) return false;
    bool sat = solver.solve();
    if (sat && model) *model = solver.model();
    return sat;
}

Substitution clause_reduct_substitution(const Clause& c,
                                        const std::map<int, std::string>& assignment) {
    Substitution s;
    for (const std::string& v : c.variables()) {
        int least = 0;
        for (const Literal& lit : c.literals)
            for (int i = 0; i < lit.arity(); ++i) {
                if (!lit.args[i].is_var() || lit.args[i].name != v) continue;
                int position = i + 1;
                if (assignment.count(position) && (least == 0 || position < least))
                    least = position;
            }
        if (least) s.bindings[v] = cst(assignment.at(least));
    }
    return s;
}

Problem universal_reduct(const Problem& p, const std::map<int, std::string>& assignment) {
    Problem out = p;
    for (Clause& c : out.clauses)
        c = apply_substitution(c, clause_reduct_substitution(c, assignment));
    for (const auto& [position, constant] : assignment) out.constants.insert(constant);
    return out;
}

Problem select_components(const Problem& p, const std::vector<int>& choice) {
    if (choice.size() != p.clauses.size())
        throw std::invalid_argument("one component index per clause expected");
    Problem out = p;
    for (std::size_t i = 0; i < p.clauses.size(); ++i) {
        std::vector<std::vector<int>> blocks = components(p.clauses[i]);
        if (choice[i] < 0 || static_cast<std::size_t>(choice[i]) >= blocks.size())
            throw std::invalid_argument("component index out of range");
        Clause reduced;
        for (int lit : blocks[choice[i]]) reduced.literals.push_back(p.clauses[i].literals[lit]);
        out.clauses[i] = std::move(reduced);
    }
    return out;
}

std::vector<std::map<int, std::string>> universal_assignments(
    const std::set<int>& positions, const std::vector<std::string>& universe) {
    std::vector<int> ordered(positions.begin(), positions.end());
    std::vector<std::map<int, std::string>> result;
    Odometer odometer(std::vector<std::size_t>(ordered.size(), universe.size()));
    while (!odometer.done) {
        std::map<int, std::string> assignment;
        for (std::size_t i = 0; i < ordered.size(); ++i)
            assignment[ordered[i]] = universe[odometer.digits[i]];
        result.push_back(std::move(assignment));
        odometer.advance();
    }
    return result;
}

std::vector<std::map<int, std::string>> universal_assignments(const Problem& p) {
    for (std::size_t i = 0; i < p.clauses.size(); ++i)
        if (!inseparable(p.clauses[i]))
            throw std::invalid_argument("clause " + std::to_string(i) +
                                        " is separable; no universal move applies");
    return universal_assignments(outer_positions_cnf(p), herbrand_universe(p));
}

std::vector<std::vector<int>> component_selections(const Problem& p) {
    std::vector<std::size_t> radix;
    radix.reserve(p.clauses.size());
    for (const Clause& c : p.clauses) radix.push_back(components(c).size());
    std::vector<std::vector<int>> result;
    Odometer odometer(std::move(radix));
    while (!odometer.done) {
        result.emplace_back(odometer.digits.begin(), odometer.digits.end());
        odometer.advance();
    }
    return result;
}

SolveResult solve_by_alternation(const Problem& p, const SolveOptions& options) {
    FragmentReport report = check_membership(p);
    if (!report.member)
        throw std::invalid_argument("problem is outside the fragment");

    Problem work = p;
    for (const std::string& c : herbrand_universe(p)) work.constants.insert(c);

    std::size_t depth_limit = options.max_depth
                                  ? options.max_depth
                                  : static_cast<std::size_t>(work.total_variables()) +
                                        static_cast<std::size_t>(work.total_literals()) + 1;
    GameSolver game(depth_limit, options.want_trace);

    SolveResult result;
    std::vector<TraceStep> path;
    std::map<std::string, bool> model;
    bool got_model = false;
    {
        std::map<std::string, bool> m;
        result.verdict =
            game.play(work, 0, options.want_trace ? &path : nullptr, &m);
        if (result.verdict == Verdict::Sat) {
            model = std::move(m);
            got_model = true;
        }
    }
    result.trace = std::move(path);
    if (got_model) result.model = std::move(model);
    result.nodes = game.nodes;
    return result;
}

OracleResult oracle_solve(const Problem& p, const OracleOptions& options) {
    std::vector<std::string> universe = herbrand_universe(p);

    unsigned long long total = 0;
    for (const Clause& c : p.clauses) {
        unsigned long long count =
            pow_saturating(universe.size(), c.variables().size(), options.max_instances);
        total += count;
        if (count > options.max_instances || total > options.max_instances)
            throw BudgetExceeded("grounding needs more than " +
                                 std::to_string(options.max_instances) + " instances");
    }

    Problem ground;
    ground.signature = p.signature;
    ground.constants = p.constants;
    for (const std::string& c : universe) ground.constants.insert(c);

    std::set<std::string> seen;
    for (const Clause& c : p.clauses) {
        std::vector<std::string> vars = c.variables();
        Odometer odometer(std::vector<std::size_t>(vars.size(), universe.size()));
        while (!odometer.done) {
            Substitution s;
            for (std::size_t i = 0; i < vars.size(); ++i)
                s.bindings[vars[i]] = cst(universe[odometer.digits[i]]);
            Clause instance = apply_substitution(c, s);
            if (seen.insert(to_string(instance)).second)
                ground.clauses.push_back(std::move(instance));
            odometer.advance();
        }
    }

    OracleResult result;
    result.instances = ground.clauses.size();
    std::map<std::string, bool> model;
    bool sat = sat_ground(ground, &model);
    result.verdict = sat ? Verdict::Sat : Verdict::Unsat;
    if (sat) result.model = std::move(model);
    return result;
}

}  // namespace qealm
