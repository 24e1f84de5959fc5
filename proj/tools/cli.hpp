#ifndef UQAW_CLI_HPP
#define UQAW_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace uqaw::cli {

/// Runs one CLI invocation (argv without the program name).
/// Exit code 0: all checks passed; 1: some verification failed;
/// 2: usage or expression errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uqaw::cli

#endif
