#ifndef AFFPAV_CLI_HPP
#define AFFPAV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace affpav::cli {

// Dispatches one command line (without the program name).  Writes the result
// to `out`, diagnostics to `err`.  Returns 0 on success, 1 on user error,
// 2 on an internal-consistency failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affpav::cli

#endif
