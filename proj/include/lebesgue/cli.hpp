#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lebesgue {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,  // verification mismatch or internal consistency violation
    kExitInvalid = 2,  // bad arguments or input outside the documented domain
};

/// Environment variable that overrides the pair enumeration cap.
inline constexpr const char* kMaxNEnv = "LEBESGUE_MAX_N";

/// Runs the command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lebesgue
