#pragma once

#include <string>
#include <vector>

namespace agk {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the verification suite; full=true covers the whole scenario registry
/// and the full sweep grids, full=false the quick subset.
std::vector<CheckResult> run_acceptance_checks(bool full);

/// Prints one pass/fail line per check; returns a process exit code.
int run_acceptance_and_report(bool full);

}  // namespace agk
