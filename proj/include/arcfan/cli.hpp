#ifndef ARCFAN_CLI_HPP
#define ARCFAN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace arcfan::cli {

/// Runs the arcfan command line on the given arguments (program name
/// excluded). Returns the process exit code: 0 success, 1 domain error or
/// sweep failures, 2 usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arcfan::cli

#endif
