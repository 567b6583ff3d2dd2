#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bgl3/action.hpp"
#include "bgl3/bigfloat.hpp"
#include "bgl3/report.hpp"
#include "bgl3/sample.hpp"

namespace bgl3 {

// Everything a run needs; every field has a documented default and a
// serialized config re-runs identically (seeded sampling throughout).
struct RunConfig {
    std::string suite = "all"; // verify-rtt | verify-vacuum | verify-izergin |
                               // verify-action | verify-induction | on-shell | all
    int sites = 3;
    int a = 1;
    int b = 1;
    int n = 1;
    std::string entry = "all";  // "11".."33" or "all"
    std::string q = "random";   // exact rational "p/r" or "random"
    std::uint64_t seed = 1;
    int precision = 50;         // float-suite decimal digits
    std::string twist = "1";    // diagonal twist constant c; "1" = untwisted
    std::string format = "text"; // text | json
    std::string output;          // report path; empty = stdout
    int rtt_points = 20;         // random (u,v) configurations across N = 1..3
    int izergin_points = 10;     // random points per Appendix identity
    int threeterm_points = 100;  // random points for the three-term K identity
    int regulator_cap = 256;     // RatFunc degree cap used inside action suites

    nlohmann::json to_json() const;
    void validate() const; // throws ConfigError
};

// ---- individual suites (deterministic in their seeds) ----

std::vector<VerificationCase> rtt_suite(int points, std::uint64_t seed,
                                        const std::optional<Rational>& q_fixed);
std::vector<VerificationCase> vacuum_suite(std::uint64_t seed, const Rational& twist,
                                           const std::optional<Rational>& q_fixed);
std::vector<VerificationCase> izergin_suite(int points, std::uint64_t seed,
                                            const std::optional<Rational>& q_fixed);
std::vector<VerificationCase> threeterm_suite(int points, std::uint64_t seed,
                                              const std::optional<Rational>& q_fixed);

// One action-formula case: direct matrix product vs the regulated partition
// sum, both multiplier assignments, and (n = 1) the resolved form.
VerificationCase verify_action(Entry entry, int sites, int a, int b, int n, std::uint64_t seed,
                               const Rational& twist, const std::optional<Rational>& q_fixed,
                               int regulator_cap);

// Sequential n = 1 actions vs the n = 2 formula, exact.
VerificationCase verify_induction(Entry entry, int sites, int a, int b, std::uint64_t seed,
                                  const Rational& twist, const std::optional<Rational>& q_fixed,
                                  int regulator_cap);

// act31 printed vs rewritten denominator, per partition, exact.
VerificationCase verify_act31_denominators(int sites, int a, int b, std::uint64_t seed,
                                           const std::optional<Rational>& q_fixed,
                                           int regulator_cap);

struct BetheRoots {
    std::vector<BigComplex> u;
    std::vector<BigComplex> v;
    int iterations = 0;
    std::string max_residual; // rational-form Bethe residual magnitude
};

// Newton iteration on the denominator-cleared form of the Bethe equations;
// deterministic in the seed, one admissible root is enough.
BetheRoots solve_bethe_roots(const ChainSpec<Rational>& chain, int a, int b, std::uint64_t seed,
                             int precision);

std::vector<VerificationCase> verify_on_shell(int sites, int a, int b, std::uint64_t seed,
                                              int precision,
                                              const std::optional<Rational>& q_fixed);

// Full run per config; cases sorted by id, exit-style pass/fail in Report.
Report run(const RunConfig& cfg);

// Worker-thread cap: BETHE_GL3_THREADS, default 1.
int thread_cap();

} // namespace bgl3
