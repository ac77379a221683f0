#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace indexcap {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitBudget = 2;

/// Runs the indexcap command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace indexcap
