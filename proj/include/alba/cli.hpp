// Command-line front end: classify, run, translate, verify.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alba::cli {

enum ExitCode : int { kOk = 0, kParseError = 1, kAlgorithmFailure = 2, kCounterexample = 3 };

/// args excludes the program name. Input is read from `in` when neither a
/// positional argument nor --file is given (or the argument is "-").
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace alba::cli
