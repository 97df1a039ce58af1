#ifndef PBELL_CLI_HPP
#define PBELL_CLI_HPP

#include <ostream>
#include <span>
#include <string>

namespace pbell::cli {

enum ExitCode : int {
  kOk = 0,
  kNotEqual = 1,
  kUsage = 2,
};

// Runs the command line `args` (without the program name). Normal output
// goes to `out`, diagnostics to `err`.
//
//   stirling --dist SPEC [--n-max N] [--r R] [--format F]
//   bell     --dist SPEC --n N [--r R] [--bivariate] [--at-x X] [--at-y Y] [--format F]
//   verify   ID [--dist SPEC] --m M --n N [--r R] [--format F]
//   sweep    ID [--dist SPEC] [--max-total T] [--r R1,R2,...] [--jobs J] [--format F]
//
// F is one of pretty (default), json, csv.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

} // namespace pbell::cli

#endif // PBELL_CLI_HPP
