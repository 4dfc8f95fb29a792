#ifndef CTREALS_CLI_HPP
#define CTREALS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ctreals::cli {

/// Exit codes: 0 success, 2 usage error, 3 work-budget exhaustion,
/// 1 any other failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctreals::cli

#endif
