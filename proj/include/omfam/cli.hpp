#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace omfam::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNotMember = 1;
inline constexpr int kBadInput = 2;
inline constexpr int kIrrationalInExactMode = 3;
inline constexpr int kGuardExceeded = 4;
inline constexpr int kDimensionMismatch = 5;

inline constexpr int kSchemaVersion = 1;

/// Runs the command line `args` (without the program name); writes the
/// report to `out` (or --output) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omfam::cli
