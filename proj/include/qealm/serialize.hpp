#ifndef QEALM_SERIALIZE_HPP
#define QEALM_SERIALIZE_HPP

#include <json.hpp>

#include "qealm/fragment.hpp"
#include "qealm/logic.hpp"
#include "qealm/qbf.hpp"
#include "qealm/resolution.hpp"
#include "qealm/scan.hpp"
#include "qealm/solver.hpp"

namespace qealm {

using nlohmann::json;

json to_json(const Diagnostic& d);
json to_json(const MembershipViolation& v);
json to_json(const Classification& c);
json to_json(const FragmentReport& report, const Problem& problem);
json to_json(const PositionAnalysis& analysis);
json to_json(const SolveResult& result);
json to_json(const OracleResult& result);
json to_json(const Substitution& s);
json to_json(const TranslationMeta& meta);
json to_json(const Derivation& d);
json to_json(const ClosureReport& report);
json to_json(const ScanRecord& record);
json to_json(const ScanReport& report);

std::string scan_report_csv(const ScanReport& report);

}  // namespace qealm

#endif
