#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace berkline::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kSchema = 2;
inline constexpr int kDomain = 3;

/// Runs one command line (without the program name). Results go to `out`
/// as JSON (DOT for `export`), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace berkline::cli
