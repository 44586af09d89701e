#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ptile {

/// Exit codes: 0 success / PASS / Found, 2 FAIL / ExhaustedNone / NodeLimit,
/// 1 usage or structural error. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptile
