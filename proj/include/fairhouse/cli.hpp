#pragma once

#include <iosfwd>

namespace fairhouse::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNoneExists = 2,
  kPreconditionFailed = 3,
  kBudgetExceeded = 4,
};

// Entry point of the fairhouse command line tool; argv[0] is the program
// name. Results go to `out`, diagnostics to `err`.
//
//   solve <instance> <problem> [--out FILE] [--format text|csv]
//   oracle <instance> <objective> <constraint> [--budget N] [--format text|csv]
//   experiment [--config FILE] [--seed N] [--out DIR] ...
//   validate <instance> <allocation> [--format text|csv]
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fairhouse::cli
