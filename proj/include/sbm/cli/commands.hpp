#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sbm/cli/output.hpp"
#include "sbm/cli/run_config.hpp"

namespace sbm::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_check_failed = 1,  ///< a table cell or certification condition failed
  exit_usage = 2,
  exit_runtime = 3,
};

/// Rows for `config.command`. Deterministic: the same config gives the same rows.
/// `check_failed` is set when a table or certification run has failures.
ResultTable run_sweep(const RunConfig& config, bool* check_failed = nullptr);

/// Full front end: parse, run, write to `out` or --out. Errors go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sbm::cli
