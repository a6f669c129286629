#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace lensfloer {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDomain = 65;
inline constexpr int kExitInternal = 70;
inline constexpr int kExitIo = 74;

/// Upper bound on p from LENSFLOER_MAX_P (default 1000000).
std::int64_t max_modulus();

/// Runs the lensfloer command line. args excludes the program name.
/// Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lensfloer
