#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stx {

// One tool invocation (arguments without the program name).  Returns the
// process exit code: 0 = every verdict passed, 1 = a verification failed
// (the report is still emitted), 2 = input or usage error (message on err).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stx
