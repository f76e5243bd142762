#pragma once

// Command-line front end. run_cli is the whole program minus process setup,
// so tests can drive it with captured streams.
//
// Exit codes: 0 all verdicts pass, 1 a mathematical verdict failed,
// 2 usage or parameter error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace radchar::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerdictFailed = 1;
inline constexpr int kExitUsage = 2;

/// Hard ceiling for --budget.
inline constexpr std::uint64_t kBudgetCeiling = 100'000'000;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radchar::cli
