#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dehnkit::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kComputeError = 3;

/// Runs one command; `args` excludes the program name. The report (or the error
/// report) goes to `out` in one write; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dehnkit::cli
