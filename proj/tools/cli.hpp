#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cnfsat::cli {

// Process exit codes of `cnfsat solve` (SAT competition convention).
inline constexpr int kExitSat = 10;
inline constexpr int kExitUnsat = 20;
inline constexpr int kExitUnknown = 30;

/// Runs the cnfsat command line; `args` excludes the program name.
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cnfsat::cli
