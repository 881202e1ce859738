#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toric::cli {

/// Runs the command line front end.  Exit codes: 0 success, 1 domain error
/// (bad matrix data, missing grading, failed oracle), 2 usage error.
/// Everything deterministic goes to `out`; timing and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
