#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace bgl3 {

inline constexpr const char* kToolName = "bethe-gl3";
inline constexpr const char* kToolVersion = "0.1.0";

// One verification case, reproducible from (suite, id parameters, seed).
struct VerificationCase {
    std::string id; // "suite/entry/N/a/b/n/seed"
    std::string suite;
    bool pass = false;
    bool exact = true;    // exact-equality suite; no tolerance involved
    std::string detail;   // diagnostics: what was checked / what mismatched
    std::string residual; // float suites only: decimal magnitude string
    double elapsed_ms = 0.0;
};

inline std::string case_id(const std::string& suite, const std::string& entry, int sites, int a,
                           int b, int n, std::uint64_t seed) {
    return suite + "/" + entry + "/" + std::to_string(sites) + "/" + std::to_string(a) + "/" +
           std::to_string(b) + "/" + std::to_string(n) + "/" + std::to_string(seed);
}

struct Report {
    nlohmann::json config_echo;
    std::vector<VerificationCase> cases;
    double elapsed_ms = 0.0;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }

    // canonical order: sorted by case id
    void finalize();

    // with_timing=false yields the byte-stable form used for determinism checks
    nlohmann::json to_json(bool with_timing = true) const;
    std::string to_text() const;
};

} // namespace bgl3
