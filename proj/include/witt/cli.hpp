#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace witt::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
};

/// Entry point of the witt-diagrams tool. `args` excludes the program name.
/// Data goes to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace witt::cli
