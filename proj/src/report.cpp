#include "nullsurf/report.hpp"

#include <sstream>

#include "nullsurf/util.hpp"

namespace nullsurf {

const char* to_string(Severity s) {
    switch (s) {
        case Severity::Mandatory: return "mandatory";
        case Severity::Warning: return "warning";
        case Severity::Diagnostic: return "diagnostic";
    }
    return "?";
}

bool VerificationReport::overall_pass() const {
    for (const auto& it : items)
        if (it.severity == Severity::Mandatory && !it.passed) return false;
    return true;
}

const VerificationItem* VerificationReport::find(const std::string& id) const {
    for (const auto& it : items)
        if (it.id == id) return &it;
    return nullptr;
}

std::string VerificationReport::render() const {
    std::ostringstream out;
    for (const auto& it : items) {
        out << (it.passed ? "  [ok]  " : (it.severity == Severity::Mandatory ? "  [FAIL]" : "  [warn]"))
            << ' ' << it.id << ": max |defect| = " << fmt_g3(it.max_defect) << " (tol "
            << fmt_g3(it.tolerance) << ", mean " << fmt_g3(it.mean_defect) << ", worst at s = "
            << fmt_g3(it.worst_s) << ")";
        if (!it.detail.empty()) out << " -- " << it.detail;
        out << '\n';
    }
    out << (overall_pass() ? "VERDICT: PASS" : "VERDICT: FAIL") << '\n';
    return out.str();
}

}  // namespace nullsurf
