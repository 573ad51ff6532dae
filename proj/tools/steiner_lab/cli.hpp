#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace steiner::cli {

/// Runs the command line given argv-style arguments (argv[0] included).
/// Exit codes: 0 success/pass, 1 verification failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Designated subcommand for every library operation; each operation appears
/// exactly once. Used by the coverage test and the documentation.
const std::vector<std::pair<std::string, std::string>>& operation_coverage();

/// All subcommand names, in dispatch order.
const std::vector<std::string>& subcommands();

} // namespace steiner::cli
