#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dg::cli {

enum class ExitCode : int { Ok = 0, Failures = 1, UsageError = 2 };

struct RunConfig {
  std::string subcommand;  // parse, validate, convert, cfg
  std::optional<std::string> grammar_path;
  std::string input_path = "-";  // "-" is standard input
  std::set<std::string> emit{"ds"};
  std::string format;  // conll, json or sexp; empty selects the subcommand default
  std::size_t max_analyses = 10000;
  std::string from, to;  // convert only
};

// Runs the `dg` command line. `args` excludes the program name. Data goes to
// `out`, diagnostics to `err`. DG_MAX_ANALYSES supplies the analysis cap when
// --max-analyses is absent.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dg::cli
