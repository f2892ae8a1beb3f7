#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wordpiece::cli {

// Entry point behind the wptok binary; split out so tests can run
// subcommands with captured streams. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace wordpiece::cli
