#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace degseq::cli {

/// Process exit codes.
enum ExitCode : int {
  kYes = 0,            ///< potentially / verified / formula matched
  kNo = 1,             ///< not potentially / no witness
  kInputError = 2,     ///< parse or precondition failure
  kDisagreement = 3,   ///< characterization vs oracle, or formula vs scan
  kBudget = 4,         ///< search budget exhausted
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degseq::cli
