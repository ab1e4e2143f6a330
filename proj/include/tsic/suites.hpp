#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsic/config.hpp"

namespace tsic {

struct SuiteOptions {
    std::uint64_t seed = 0;
    int trials = 0;  // 0 = the suite's default; fixed sweeps ignore it
    Caps caps;
    int threads = 1;  // accepted for interface symmetry; results never depend on it
};

struct SuiteResult {
    std::string name;
    int trials = 0;
    int checks = 0;
    int failures = 0;
    std::vector<std::string> notes;  // one line per failure, capped
};

// Suites:
//   coloring-rules : validator verdicts match a direct definition-level recheck
//   blocks         : all blocks along each part axis are pairwise isomorphic
//   products       : product chromatic bounds and membership predicates
//   case1-rates    : block-product constructions vs closed forms and exact rates
//   case2e-codes   : folding codes have the promised length and decode
//   monotonicity   : more side information never raises the rate
const std::vector<std::string>& suite_names();

// Runs one suite; throws input_error for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

// Runs one suite or, for "all", every suite in the order above.
std::vector<SuiteResult> run_suites(const std::string& name_or_all,
                                    const SuiteOptions& opt = {});

// Deterministic plain-text summary (no timings, no machine state).
std::string suites_report(const std::vector<SuiteResult>& results);

}  // namespace tsic
