#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stcalc {

/// Command dispatcher behind the stcalc binary. Exit codes: 0 success,
/// 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace stcalc
