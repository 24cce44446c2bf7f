#pragma once

#include <string>
#include <vector>

namespace semialg::cli {

struct RunResult {
    int exit_code = 0;          // 0 ok, 1 input error, 2 numeric failure
    std::string out;            // JSON report (also written to --out if given)
    std::string err;            // human-readable diagnostics
};

/// Dispatch one invocation. args excludes the program name.
RunResult run(const std::vector<std::string>& args);

}   // namespace semialg::cli
