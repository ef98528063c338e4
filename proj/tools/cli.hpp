#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace towerlab::cli {

// Runs one command line (without the program name) against the given
// streams. Returns the process exit code: 0 on success, 1 on a domain
// error (one line on err), 2 on a usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace towerlab::cli
