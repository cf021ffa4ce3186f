#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ovc {

// Exit codes: 0 success, 1 failed verification or aborted game,
// 2 invalid input, 3 resource cap exceeded.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err, std::istream& in);

}  // namespace ovc
