#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spectable {

enum class ExitCode : int { success = 0, mismatch = 1, usage = 2 };

/// Runs one command line (args exclude the program name). Output goes to
/// `out`, diagnostics to `err`. Returns 0, 1 on verification mismatch, or 2
/// on usage and input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spectable
