#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace cryptobench::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// Runs one command line. `args` excludes the program name. Text comes from
/// `in` unless --input names a file; results go to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cryptobench::cli
