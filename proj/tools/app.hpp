// munnlab - representation types of Munn algebras and Rees matrix semigroups
//
// The command-line tool as a function, so tests can drive it in-process.

#ifndef MUNNLAB_TOOLS_APP_HPP_
#define MUNNLAB_TOOLS_APP_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace munnlab::cli {

  //! Exit codes of the tool.
  enum ExitCode : int {
    exit_ok            = 0,
    exit_internal      = 1,
    exit_invalid_input = 2,
    exit_modular       = 3,
    exit_disagreement  = 4,
    exit_budget        = 5,
  };

  inline constexpr char const* report_schema_version = "1.0";

  //! Runs the tool on `args` (without the program name).
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace munnlab::cli

#endif  // MUNNLAB_TOOLS_APP_HPP_
