#ifndef LEIBNIZ_CLI_HPP
#define LEIBNIZ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace leibniz {

/// Runs one CLI invocation: JSON result on `out`, human summary on `err`.
/// Exit codes: 0 success, 1 failed check/assertion, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leibniz

#endif
