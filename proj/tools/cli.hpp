#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monreg::cli {

enum ExitCode : int {
  kOk = 0,
  kContractViolation = 1,  // internal error or method disagreement
  kBadInput = 2,           // parse error or violated precondition
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; input is read from `in` unless --input is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace monreg::cli
