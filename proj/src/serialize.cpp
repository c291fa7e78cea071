#include "qealm/serialize.hpp"

#include <sstream>

namespace qealm {

json to_json(const Diagnostic& d) {
    json out{{"severity", d.severity == Severity::Error ? "error" : "warning"},
             {"message", d.message}};
    if (d.line > 0) out["line"] = d.line;
    if (d.column > 0) out["column"] = d.column;
    if (d.clause_index >= 0) out["clause"] = d.clause_index;
    return out;
}

json to_json(const MembershipViolation& v) {
    return json{{"clause", v.clause},     {"variable", v.variable},
                {"literal1", v.lit1},     {"literal2", v.lit2},
                {"condition", v.condition}, {"positions", v.positions}};
}

json to_json(const Classification& c) {
    return json{{"kind", c.kind}, {"level", c.level}};
}

json to_json(const FragmentReport& report, const Problem& problem) {
    json violations = json::array();
    for (const MembershipViolation& v : report.violations) violations.push_back(to_json(v));
    json out{{"member", report.member},
             {"violations", violations},
             {"fork_indices", report.fork_indices},
             {"outer_positions", outer_positions_cnf(problem)}};
    if (report.classification) out["classification"] = to_json(*report.classification);
    return out;
}

json to_json(const PositionAnalysis& analysis) {
    return json{{"outer_variables", analysis.outer_variables},
                {"opos", analysis.opos},
                {"npos", analysis.npos}};
}

json to_json(const SolveResult& result) {
    json trace = json::array();
    for (const TraceStep& step : result.trace) {
        if (step.kind == TraceStep::Kind::Universal) {
            json choices = json::object();
            for (const auto& [position, constant] : step.position_assignment)
                choices[std::to_string(position)] = constant;
            trace.push_back(json{{"kind", "universal"}, {"choices", choices}});
        } else if (step.kind == TraceStep::Kind::Existential) {
            trace.push_back(json{{"kind", "existential"}, {"choices", step.component_choice}});
        }
    }
    json out{{"verdict", to_string(result.verdict) == "sat" ? "SAT" : "UNSAT"},
             {"trace", trace},
             {"nodes", result.nodes}};
    if (result.model) out["model"] = *result.model;
    return out;
}

json to_json(const OracleResult& result) {
    json out{{"verdict", result.verdict == Verdict::Sat ? "SAT" : "UNSAT"},
             {"instances", result.instances}};
    if (result.model) out["model"] = *result.model;
    return out;
}

json to_json(const Substitution& s) {
    json out = json::object();
    for (const auto& [name, term] : s.bindings) out[name] = to_string(term);
    return out;
}

json to_json(const TranslationMeta& meta) {
    json predicates = json::object();
    for (const auto& [variable, named] : meta.predicates)
        predicates[std::to_string(variable)] =
            json{{"predicate", named.first}, {"arity", named.second}};
    json universal_order = json::object();
    for (const auto& [variable, index] : meta.universal_order)
        universal_order[std::to_string(variable)] = index;
    json out{{"encoding", meta.encoding},
             {"predicates", predicates},
             {"universal_order", universal_order}};
    if (!meta.padded_prefix.empty()) {
        json padded = json::array();
        for (const auto& [quantifier, variable] : meta.padded_prefix)
            padded.push_back(
                json{{"quantifier", quantifier == Quantifier::Forall ? "a" : "e"},
                     {"variable", variable}});
        out["padded_prefix"] = padded;
    }
    return out;
}

json to_json(const Derivation& d) {
    return json{{"parents", d.parents},
                {"rule", d.rule},
                {"unifier", to_json(d.unifier)},
                {"clause", to_string(d.clause)}};
}

json to_json(const ClosureReport& report) {
    json violating = json::array();
    for (const Clause& c : report.violating) violating.push_back(to_string(c));
    json derivations = json::array();
    for (const Derivation& d : report.derivations) derivations.push_back(to_json(d));
    return json{{"complete", report.complete},
                {"derived", report.derived},
                {"attempts", report.attempts},
                {"violations", report.violations()},
                {"violating", violating},
                {"empty_clause", report.empty_clause},
                {"derivations", derivations}};
}

json to_json(const ScanRecord& record) {
    json diagnostics = json::array();
    for (const Diagnostic& d : record.diagnostics) diagnostics.push_back(to_json(d));
    json out{{"path", record.path},
             {"parsed", record.parsed},
             {"epr", record.epr_legal},
             {"member", record.member},
             {"fork_indices", record.fork_indices},
             {"fork_count", record.fork_count},
             {"milliseconds", record.milliseconds},
             {"diagnostics", diagnostics}};
    if (record.classification) out["classification"] = to_json(*record.classification);
    return out;
}

json to_json(const ScanReport& report) {
    json records = json::array();
    for (const ScanRecord& record : report.records) records.push_back(to_json(record));
    return json{{"records", records},
                {"summary",
                 json{{"total", report.summary.total},
                      {"parse_errors", report.summary.parse_errors},
                      {"epr", report.summary.epr},
                      {"member", report.summary.member},
                      {"fork_histogram", report.summary.fork_histogram}}}};
}

std::string scan_report_csv(const ScanReport& report) {
    std::ostringstream out;
    out << "path,parsed,epr,member,fork_count,fork_indices,classification,milliseconds\n";
    for (const ScanRecord& record : report.records) {
        out << record.path << ',' << (record.parsed ? 1 : 0) << ','
            << (record.epr_legal ? 1 : 0) << ',' << (record.member ? 1 : 0) << ','
            << record.fork_count << ',';
        out << '"';
        bool first = true;
        for (int index : record.fork_indices) {
            if (!first) out << ' ';
            out << index;
            first = false;
        }
        out << '"' << ',';
        if (record.classification)
            out << record.classification->kind << record.classification->level;
        out << ',' << record.milliseconds << '\n';
    }
    return out.str();
}

}  // namespace qealm
