#pragma once

// Named verification suites over the library's exact identities. Each check
// states one identity, runs every configured case, and reports pass/fail with
// a deterministic detail string, so repeated runs (at any thread count)
// serialize identically.

#include <string>
#include <vector>

namespace trivzero {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    long passed = 0;
    long failed = 0;
};

// suite: lemma41 | reciprocity | lp | eisenstein | all (runs the four in that
// order). max_m bounds the geometric-identity sweep (default 30). threads
// splits independent cases; results are assembled in case order regardless.
std::vector<SuiteResult> run_verify(const std::string& suite, long max_m,
                                    long threads);

} // namespace trivzero
