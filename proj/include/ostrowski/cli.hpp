#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ostrowski::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Expression grammar and flag table printed on usage errors.
std::string usage_text();

}  // namespace ostrowski::cli
