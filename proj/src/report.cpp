#include "bgl3/report.hpp"

#include <algorithm>
#include <sstream>

namespace bgl3 {

int Report::passed() const {
    int n = 0;
    for (const auto& c : cases)
        if (c.pass) ++n;
    return n;
}

int Report::failed() const { return static_cast<int>(cases.size()) - passed(); }

void Report::finalize() {
    std::sort(cases.begin(), cases.end(),
              [](const VerificationCase& a, const VerificationCase& b) { return a.id < b.id; });
}

nlohmann::json Report::to_json(bool with_timing) const {
    nlohmann::json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["config"] = config_echo;
    nlohmann::json jcases = nlohmann::json::array();
    for (const auto& c : cases) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["suite"] = c.suite;
        jc["status"] = c.pass ? "pass" : "fail";
        jc["exact"] = c.exact;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        if (!c.residual.empty()) jc["residual"] = c.residual;
        if (with_timing) jc["elapsed_ms"] = c.elapsed_ms;
        jcases.push_back(std::move(jc));
    }
    j["cases"] = std::move(jcases);
    j["totals"] = {{"cases", cases.size()}, {"pass", passed()}, {"fail", failed()}};
    if (with_timing) j["elapsed_ms"] = elapsed_ms;
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& c : cases) {
        os << (c.pass ? "PASS " : "FAIL ") << c.id;
        if (!c.residual.empty()) os << "  residual=" << c.residual;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    os << "total " << cases.size() << "  pass " << passed() << "  fail " << failed() << "  ("
       << elapsed_ms << " ms)\n";
    return os.str();
}

} // namespace bgl3
