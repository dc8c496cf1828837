#include "sbm/cli/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <memory>

#include <CLI11.hpp>

#include "sbm/errors.hpp"

namespace sbm::cli {
namespace {

double parse_double(std::string_view text, std::string_view what) {
  try {
    std::size_t used = 0;
    const std::string s(text);
    const double value = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
}

Excitation parse_excitation(double value) {
  const double twice = 2.0 * value;
  if (std::abs(twice - std::round(twice)) > 1e-12) {
    throw UsageError("--lambda-max must be an integer or half-integer");
  }
  return Excitation::from_twice(static_cast<int>(std::lround(twice)));
}

struct RawOptions {
  int n_spins = 2;
  double r = 0.0;
  double ra = 0.0;
  double rb = 0.0;
  double kappa = 0.0;
  double kappa_b = 0.0;
  std::string kappa_range;
  std::string r_range;
  std::string sweep;
  double lambda_max = 3.0;
  std::string format = "csv";
  std::string out;
  int table_id = 0;
};

struct Parser {
  CLI::App app{"Exact diagonalization of the detuned spin-boson model: level crossings and "
               "ground-state spin entanglement.\nEnergies in units of the spin splitting; "
               "couplings dimensionless.",
               "sbm"};
  RawOptions raw;
  std::vector<std::pair<Command, CLI::App*>> subcommands;

  Parser() {
    app.require_subcommand(1);
    add(Command::spectrum, "Lowest energy of every block along a coupling sweep");
    add(Command::gsi, "Level-crossing couplings in sequence");
    add(Command::concurrence, "Ground-state concurrence profile with crossing and kink markers");
    add(Command::phase_diagram, "Single-mode crossing curves over a detuning grid");
    add(Command::table, "Recompute a reference table and diff it against the stored values");
    add(Command::certify, "Numerical certification of sequential crossings");
  }

  void add(Command command, const std::string& description) {
    CLI::App* sub = app.add_subcommand(std::string(command_name(command)), description);
    sub->add_option("--n-spins", raw.n_spins, "Number of spins N")->capture_default_str();
    sub->add_option("--r", raw.r, "Single-mode detuning r = w/w0 - 1")->capture_default_str();
    sub->add_option("--ra", raw.ra, "Mode-a detuning (selects the two-mode model)");
    sub->add_option("--rb", raw.rb, "Mode-b detuning (selects the two-mode model)");
    sub->add_option("--kappa", raw.kappa, "Coupling kappa (kappa_a for two modes)");
    sub->add_option("--kappa-b", raw.kappa_b, "Mode-b coupling (selects the two-mode model)");
    sub->add_option("--kappa-range", raw.kappa_range, "Coupling grid lo:hi:steps");
    sub->add_option("--r-range", raw.r_range, "Detuning grid lo:hi:steps");
    sub->add_option("--sweep", raw.sweep, "Swept coupling for two modes: tied | a | b")
        ->check(CLI::IsMember({"tied", "a", "b"}));
    sub->add_option("--lambda-max", raw.lambda_max, "Largest excitation number considered")
        ->capture_default_str();
    sub->add_option("--format", raw.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", raw.out, "Output path (default: stdout)");
    if (command == Command::table) {
      sub->add_option("id", raw.table_id, "Table number 1..5")->required()->check(CLI::Range(1, 5));
    }
    subcommands.emplace_back(command, sub);
  }
};

}  // namespace

std::string_view command_name(Command command) {
  switch (command) {
    case Command::spectrum: return "spectrum";
    case Command::gsi: return "gsi";
    case Command::concurrence: return "concurrence";
    case Command::phase_diagram: return "phase-diagram";
    case Command::table: return "table";
    case Command::certify: return "certify";
  }
  return "";
}

GridSpec GridSpec::parse(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw UsageError("grid '" + std::string(text) + "' is not of the form lo:hi:steps");
  }
  GridSpec grid;
  grid.lo = parse_double(text.substr(0, first), "grid start");
  grid.hi = parse_double(text.substr(first + 1, second - first - 1), "grid end");
  const std::string_view steps = text.substr(second + 1);
  const auto [ptr, ec] = std::from_chars(steps.data(), steps.data() + steps.size(), grid.steps);
  if (ec != std::errc() || ptr != steps.data() + steps.size()) {
    throw UsageError("grid step count '" + std::string(steps) + "' is not an integer");
  }
  if (grid.steps < 1) throw UsageError("grid needs at least one point");
  if (grid.hi < grid.lo) throw UsageError("grid range must be ordered (lo <= hi)");
  if (grid.steps > 1 && grid.hi == grid.lo) throw UsageError("grid with several points needs lo < hi");
  return grid;
}

std::vector<double> GridSpec::points() const {
  if (steps == 1) return {lo};
  std::vector<double> out(steps);
  for (int i = 0; i < steps; ++i) out[i] = lo + (hi - lo) * i / (steps - 1);
  out.back() = hi;
  return out;
}

void RunConfig::validate() const {
  try {
    model.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if ((command == Command::concurrence || command == Command::spectrum) && !kappa_range) {
    throw UsageError(std::string(command_name(command)) + " needs --kappa-range");
  }
  if (command == Command::phase_diagram) {
    if (!r_range) throw UsageError("phase-diagram needs --r-range");
    if (model.is_two_mode()) throw UsageError("phase-diagram covers the single-mode model");
  }
  if (r_range && r_range->lo <= -1.0) throw UsageError("detunings must be > -1");
  if (kappa_range && kappa_range->lo < 0.0) throw UsageError("couplings must be >= 0");
  if (axis != CouplingAxis::tied && !model.is_two_mode()) {
    throw UsageError("--sweep a|b applies to the two-mode model");
  }
  if (command == Command::certify && axis != CouplingAxis::tied) {
    throw UsageError("certify sweeps every coupling together; drop --kappa-b and --sweep");
  }
  if (command == Command::table && (table_id < 1 || table_id > 5)) {
    throw UsageError("table id must be 1..5");
  }
  if (lambda_max < Excitation::lowest(model.n_spins)) {
    throw UsageError("--lambda-max is below -N/2");
  }
  if ((lambda_max.twice() + model.n_spins) % 2 != 0) {
    throw UsageError("--lambda-max must differ from -N/2 by an integer");
  }
}

RunConfig parse_run_config(const std::vector<std::string>& args) {
  auto parser = std::make_unique<Parser>();
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    parser->app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{usage_text()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig config;
  CLI::App* chosen = nullptr;
  for (const auto& [command, sub] : parser->subcommands) {
    if (sub->parsed()) {
      config.command = command;
      chosen = sub;
    }
  }
  const RawOptions& raw = parser->raw;
  const bool two_mode = chosen->count("--ra") + chosen->count("--rb") + chosen->count("--kappa-b") > 0;
  if (two_mode) {
    if (chosen->count("--r")) throw UsageError("use --ra/--rb, not --r, for the two-mode model");
    config.model = ModelParams::two_mode(raw.n_spins, raw.ra, raw.rb, raw.kappa, raw.kappa_b);
  } else {
    config.model = ModelParams::single_mode(raw.n_spins, raw.r, raw.kappa);
  }
  if (raw.sweep == "a") {
    config.axis = CouplingAxis::mode_a;
  } else if (raw.sweep == "b") {
    config.axis = CouplingAxis::mode_b;
  } else if (raw.sweep.empty() && two_mode && chosen->count("--kappa-b")) {
    config.axis = CouplingAxis::mode_a;  // κ_b given, so it is held
  }
  if (!raw.kappa_range.empty()) config.kappa_range = GridSpec::parse(raw.kappa_range);
  if (!raw.r_range.empty()) config.r_range = GridSpec::parse(raw.r_range);
  config.lambda_max = parse_excitation(raw.lambda_max);
  config.table_id = raw.table_id;
  config.format = raw.format == "json" ? OutputFormat::json : OutputFormat::csv;
  if (!raw.out.empty()) config.out_path = raw.out;
  config.validate();
  return config;
}

std::string usage_text() {
  Parser parser;
  std::string text = parser.app.help();
  for (const auto& [command, sub] : parser.subcommands) text += "\n" + sub->help();
  return text;
}

}  // namespace sbm::cli
