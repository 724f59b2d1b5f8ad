#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratdec::cli {

inline constexpr int kExitSuccess = 0;         // success / positive outcome
inline constexpr int kExitVerifiedFailure = 1; // has_negative, no_cover, singular, verification reject
inline constexpr int kExitUsage = 2;           // usage, parse or IO error
inline constexpr int kExitSizeCap = 3;         // size cap exceeded
inline constexpr int kExitInternal = 4;        // internal invariant broke (should not happen)

/// Runs the tool on the given arguments (excluding the program name),
/// writing to the supplied streams. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace ratdec::cli
