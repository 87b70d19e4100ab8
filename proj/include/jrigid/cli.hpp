#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jrigid {

// Entry point shared by the binary and the tests.  args excludes the program
// name.  Reports go to out, diagnostics to err.  Returns 0 on success, 1 when
// a mathematical check fails, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jrigid
