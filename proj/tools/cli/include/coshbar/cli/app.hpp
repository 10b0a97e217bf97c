#pragma once

#include <iosfwd>

namespace coshbar::cli {

/// Entry point of the `coshbar` tool. Tables and reports go to `out` (or to
/// the --out file), diagnostics to `err`. Returns the process exit code:
/// 0 success, 1 verification failures, 2 bad configuration or usage,
/// 3 numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coshbar::cli
