#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qser::cli {

/// Exit codes: 0 expectation met, 1 mathematical mismatch, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

inline constexpr long long kDefaultExpandOrder = 20;
inline constexpr long long kDefaultVerifyOrder = 200;
inline constexpr long long kDefaultScanNMax = 500;

/// Runs `qser <args...>` (args excludes the program name). Data goes to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qser::cli
