#ifndef JV_CLI_HPP
#define JV_CLI_HPP

#include <ostream>

namespace jv {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitParse = 2, kExitBudget = 3 };

/// Runs the `jv` command line. Results go to `out`, one-line diagnostics to
/// `err`; the return value is one of ExitCode.
int run_cli(int argc, const char* const argv[], std::ostream& out, std::ostream& err);

}  // namespace jv

#endif  // JV_CLI_HPP
