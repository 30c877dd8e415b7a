#pragma once

#include <iosfwd>

namespace ffl {

// fflcli entry point: compute {partition-function | schur | llt | tau} or
// verify <check>. JSON goes to `out`, diagnostics to `err`.
// Exit status: 0 pass, 1 check failure, 2 config or usage error.
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ffl
