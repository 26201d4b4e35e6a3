#pragma once

#include <string>
#include <vector>

namespace witt {

struct VerifyOptions {
    int max_n = 20;         // recursion, counting, generating functions, module cross-checks
    int oracle_max_n = 14;  // brute force against recursion
    int twist_max_n = 99;   // canonical class checks
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the full invariant suite; never throws on a failed check.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

}  // namespace witt
