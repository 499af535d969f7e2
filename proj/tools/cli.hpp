#pragma once

#include <ostream>

namespace morpheval::cli {

// Runs one command line. Reports go to --out (or `out`), diagnostics to
// `err`. Returns 0 on success, 1 on invalid or missing input, 2 on usage
// errors.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace morpheval::cli
