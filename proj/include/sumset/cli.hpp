#ifndef SUMSET_CLI_HPP
#define SUMSET_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sumset {

/// Command-line entry point. Subcommands: search, certify, minimal,
/// construct, analyze, verify-paper. Exit codes: 0 found/certified,
/// 1 none-in-domain (or a failed check), 2 resource cap, 3 input error.
/// Runs with identical arguments produce identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sumset

#endif
