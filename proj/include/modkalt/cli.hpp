#ifndef MODKALT_CLI_HPP
#define MODKALT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace modkalt {

/// Runs the command-line tool. `args` excludes the program name.
/// Exit codes: 0 success, 1 verification failure, 2 usage error,
/// 3 budget/size limit exceeded, 4 I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modkalt

#endif  // MODKALT_CLI_HPP
