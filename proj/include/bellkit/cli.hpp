#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bellkit {

namespace exit_code {
inline constexpr int satisfied = 0;    // computed; classical constraint holds (or none applies)
inline constexpr int violated = 1;     // computed; constraint violated, a result rather than an error
inline constexpr int input_error = 2;  // bad flags, malformed config, failed validation
}  // namespace exit_code

/// One command-line invocation. args excludes the program name. The JSON
/// report goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bellkit
