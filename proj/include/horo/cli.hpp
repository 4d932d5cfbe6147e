#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "horo/common.hpp"

namespace horo::cli {

/// Exit codes: 0 success, 1 domain error, 2 usage or parse error.
enum ExitCode : int { kOk = 0, kDomainError = 1, kParseError = 2 };

/// Runs one command. `args` excludes the program name. Output is JSON with
/// numbers rounded to 12 significant digits; identical args give
/// byte-identical output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Tolerance& tol = kDefaultTolerance);

/// Tolerance with rtol taken from the value of HOROLIB_TOL, if set.
/// Throws io::ParseError for a value that is not a positive number.
Tolerance tolerance_from_env(const char* value);

}  // namespace horo::cli
