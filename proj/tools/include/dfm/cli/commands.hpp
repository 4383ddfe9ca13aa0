#pragma once

#include <iosfwd>

namespace dfm::cli {

// Exit codes shared by every command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

// Parses argv and runs one subcommand. Reports and field output go to out,
// diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dfm::cli
