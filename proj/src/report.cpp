#include "amort/harness.hpp"

#include <sstream>

#include <json.hpp>

namespace amort {

std::string to_string(StructureKind kind) {
    switch (kind) {
        case StructureKind::Stack: return "stack";
        case StructureKind::Heap: return "heap";
        case StructureKind::FingerTree: return "fingertree";
    }
    return "?";
}

std::optional<StructureKind> parse_structure(const std::string& name) {
    if (name == "stack") return StructureKind::Stack;
    if (name == "heap") return StructureKind::Heap;
    if (name == "fingertree") return StructureKind::FingerTree;
    return std::nullopt;
}

namespace {

nlohmann::json report_json(const VerifyReport& r, bool with_elapsed) {
    nlohmann::json violations = nlohmann::json::array();
    for (const Violation& v : r.violations)
        violations.push_back(
            {{"input", v.input}, {"bound", v.bound}, {"observed", v.observed}});
    nlohmann::json obj = {{"suite", r.suite},
                          {"seed", r.seed},
                          {"cases_run", r.cases_run},
                          {"violations", violations},
                          {"oracle_mismatches", r.oracle_mismatches}};
    if (with_elapsed) obj["elapsed_ms"] = r.elapsed_ms;
    return obj;
}

nlohmann::json reports_json(const std::vector<VerifyReport>& reports,
                            bool with_elapsed) {
    nlohmann::json arr = nlohmann::json::array();
    for (const VerifyReport& r : reports) arr.push_back(report_json(r, with_elapsed));
    return arr;
}

}  // namespace

std::string report_to_json(const VerifyReport& report) {
    return report_json(report, true).dump(2);
}

std::string reports_to_json(const std::vector<VerifyReport>& reports) {
    return reports_json(reports, true).dump(2);
}

std::string reports_to_json_stable(const std::vector<VerifyReport>& reports) {
    return reports_json(reports, false).dump(2);
}

std::string reports_to_text(const std::vector<VerifyReport>& reports) {
    std::ostringstream out;
    for (const VerifyReport& r : reports) {
        out << (r.passed() ? "PASS" : "FAIL") << "  " << r.suite << "  (seed " << r.seed
            << ", " << r.cases_run << " cases, " << r.violations.size() << " violations, "
            << r.oracle_mismatches << " oracle mismatches, " << r.elapsed_ms << " ms)\n";
        for (const Violation& v : r.violations)
            out << "    violation: " << v.input << "  observed " << v.observed
                << " > bound " << v.bound << "\n";
    }
    return out.str();
}

}  // namespace amort
