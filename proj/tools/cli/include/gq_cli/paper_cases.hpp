#ifndef GQ_CLI_PAPER_CASES_HPP_
#define GQ_CLI_PAPER_CASES_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace gq::cli {

  struct CaseResult {
    std::string id;
    std::string title;
    bool        pass = false;
    //! One line per compared quantity, "expected ... got ...".
    std::vector<std::string> details;
  };

  //! Case ids in run order.
  std::vector<std::string> case_ids();
  bool                     is_case_id(std::string const& id);

  //! Throws std::out_of_range for an unknown id.
  CaseResult run_case(std::string const& id, std::size_t threads);

}  // namespace gq::cli

#endif  // GQ_CLI_PAPER_CASES_HPP_
