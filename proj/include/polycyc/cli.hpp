#pragma once

#include <iosfwd>

namespace polycyc::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kPrecondition = 2;
inline constexpr int kMathFailure = 3;
inline constexpr int kUnknownSubcommand = 64;
inline constexpr int kMalformed = 65;

// Runs one subcommand; JSON result on `out`, diagnostics on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polycyc::cli
