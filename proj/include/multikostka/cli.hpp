#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multikostka::cli {

/// Exit codes: 0 success (or predicate true), 1 predicate false under
/// --exit-code, 2 malformed input or a domain error.
enum ExitCode : int { Ok = 0, PredicateFalse = 1, Failure = 2 };

/// Runs one command line (without the program name). The result document
/// goes to `out`; on failure a JSON {"error","message"} object goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multikostka::cli
