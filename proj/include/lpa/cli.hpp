#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpa::cli {

/// Exit codes: 0 success or predicate true, 1 predicate false or no
/// witness, 2 error.
enum ExitCode : int { kTrue = 0, kFalse = 1, kError = 2 };

/// Runs one `lpa` command; `args` excludes the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lpa::cli
