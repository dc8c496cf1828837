#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sbm/cli/output.hpp"
#include "sbm/excitation.hpp"
#include "sbm/gsi.hpp"
#include "sbm/model.hpp"

namespace sbm::cli {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Command { spectrum, gsi, concurrence, phase_diagram, table, certify };

std::string_view command_name(Command command);

/// "lo:hi:steps" with `steps` sample points, both ends included.
struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 1;

  static GridSpec parse(std::string_view text);
  std::vector<double> points() const;
};

struct RunConfig {
  Command command = Command::spectrum;
  ModelParams model;
  CouplingAxis axis = CouplingAxis::tied;
  std::optional<GridSpec> kappa_range;
  std::optional<GridSpec> r_range;
  Excitation lambda_max = Excitation::integer(3);
  int table_id = 0;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> out_path;

  /// Throws UsageError for missing grids or an invalid model.
  void validate() const;
};

/// Parses `args` (without the program name). Throws UsageError.
RunConfig parse_run_config(const std::vector<std::string>& args);

/// Help text for the whole tool.
std::string usage_text();

}  // namespace sbm::cli

namespace sbm::cli {

/// Thrown by parse_run_config for -h/--help; carries the text to print.
struct HelpRequested {
  std::string text;
};

}  // namespace sbm::cli
