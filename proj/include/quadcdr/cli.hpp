#ifndef QUADCDR_CLI_HPP
#define QUADCDR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace quadcdr::cli {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 success, 1 domain error or not_cdr verdict, 2 usage/parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadcdr::cli

#endif
