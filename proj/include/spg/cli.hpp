#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spg {

/// Process exit codes of spgcert.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;  ///< bad arguments or unreadable/unwritable files
inline constexpr int parse = 2;
inline constexpr int invalid = 3;
inline constexpr int unknown = 4;
inline constexpr int negative = 5;
}  // namespace exit_code

/// Runs one spgcert command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spg
