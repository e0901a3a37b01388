#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hypershadow::cli {

inline constexpr std::uint64_t kDefaultSeed = 271828;
inline constexpr std::uint64_t kDefaultTrials = 100000;
inline constexpr const char* kTrialsEnvVar = "HYPERSHADOW_DEFAULT_TRIALS";

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

// Environment lookups go through this hook so tests can inject values.
using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

EnvLookup process_environment();

const char* tool_version();

// Runs one invocation. args excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env = process_environment());

}  // namespace hypershadow::cli
