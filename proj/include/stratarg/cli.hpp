#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stratarg {

/// Exit codes: 0 yes/compliant/success, 1 no/violation, 2 usage, parse or
/// bound error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stratarg
