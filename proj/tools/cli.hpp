#pragma once

#include <cstdint>
#include <iosfwd>

namespace gl4::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

enum ExitCode : int { kPositive = 0, kNegative = 1, kUsage = 2 };

/// Entry point of gl4cert; writes to the given streams instead of std::cout/cerr.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gl4::cli
