#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgmf {

// Runs the lgmf command line. args excludes the program name. Returns 0 when
// every verification passed, 1 on a verification failure and 2 on usage,
// parse or I/O errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgmf
