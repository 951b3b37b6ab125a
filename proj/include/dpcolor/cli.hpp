#ifndef DPCOLOR_CLI_HPP
#define DPCOLOR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dpcolor::cli {

// Runs one CLI invocation. Exit status: 0 success, 1 failed verification
// suite, 2 argument/input errors, 3 capacity errors, 4 internal errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace dpcolor::cli

#endif
