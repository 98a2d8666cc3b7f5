#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tolfca::cli {

// Runs one command given its arguments (program name excluded). Streams are
// injected so tests can drive the tool in-process. Returns the exit code:
// 0 success / all checks pass, 1 verification failure, 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tolfca::cli
