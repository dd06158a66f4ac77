#ifndef GQ_CLI_CLI_HPP_
#define GQ_CLI_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace gq::cli {

  enum ExitCode : int { kOk = 0, kFalse = 1, kUsage = 2, kCapacity = 3 };

  //! Runs one command line (without the program name). Output is
  //! deterministic for identical inputs.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace gq::cli

#endif  // GQ_CLI_CLI_HPP_
