#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latpack::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kResourceError = 2;
inline constexpr int kVerificationFailed = 3;

/// Name of the environment variable overriding the enumeration node budget.
inline constexpr const char* kBudgetEnv = "LATPACK_ENUM_BUDGET";

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace latpack::cli
