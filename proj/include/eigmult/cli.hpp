#pragma once

#include <iosfwd>

namespace eigmult {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Subcommands: compute, family, verify-chain, survey, certify, zf.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eigmult
