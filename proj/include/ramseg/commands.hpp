#ifndef RAMSEG_COMMANDS_HPP
#define RAMSEG_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ramseg {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,        // success, or a stabbing line was found
    kExitNegative = 1,  // a check failed, or no stabbing line exists
    kExitUsage = 2,     // bad arguments or unreadable input
    kExitCap = 3,       // a resource cap was hit
};

struct VerificationReport {
    std::string check;
    bool passed = false;
    std::vector<std::string> details;
    double millis = 0;
};

/// Runs a verification target: "ma", "mb", "lemma1", "m0", "exponent" or
/// "all". Throws std::invalid_argument for an unknown target.
std::vector<VerificationReport> run_verification(const std::string& target);

/// Entry point of the tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramseg

#endif
