#ifndef SLN_CLI_HPP
#define SLN_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace sln::cli {

/// Exit codes, stable for scripting.
enum ExitCode {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kPrecondition = 3,
  kBudget = 4,
  kGalleryAssertion = 5,
};

/// Runs one command line (without the program name). Kept in a library so
/// tests drive the exact code path the binary uses.
int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
        std::ostream& err = std::cerr, std::istream& in = std::cin);

}  // namespace sln::cli

#endif  // SLN_CLI_HPP
