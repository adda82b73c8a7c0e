#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace roughalg::cli {

/// Exit codes: 0 all checks passed or query answered, 1 a property was
/// violated or a counterexample found, 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitInput = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace roughalg::cli
