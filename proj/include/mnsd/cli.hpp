#pragma once

#include <iosfwd>

namespace mnsd::io {

// Command-line entry point. Exit codes: 0 success, 1 usage or configuration
// error, 2 invalid input, 3 engine/reference mismatch under --compare-paper.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mnsd::io
