#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fdalg::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one fdalg invocation. The JSON report goes to `out`, diagnostics to `err`.
/// Exit codes: 0 PASS/OK, 1 FAIL, 2 UNDECIDED, 3 usage or internal error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with args[0] standing in for the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fdalg::cli
