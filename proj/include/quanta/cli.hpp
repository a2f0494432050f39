#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quanta {

inline constexpr int kExitOk = 0;
inline constexpr int kExitGoldenMismatch = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitCapacity = 3;

/// Runs one of the subcommands `cadences`, `quantum`, `catalog`, `nerve`.
/// `args` excludes the program name. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quanta
