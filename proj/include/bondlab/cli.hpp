#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bondlab::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kBudgetExhausted = 3,
};

/// Runs the command line `args` (without the program name). Errors go to
/// `err` as "bondlab: error[<kind>]: <message>", with kind one of usage,
/// input, budget, internal.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bondlab::cli
