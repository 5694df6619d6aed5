#ifndef RRCOMB_TOOLS_CLI_HPP
#define RRCOMB_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rrcomb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rrcomb::cli

#endif  // RRCOMB_TOOLS_CLI_HPP
