#include "sbm/cli/commands.hpp"

#include <fstream>
#include <ostream>

#include <fmt/core.h>
#include <fmt/ostream.h>

#include "sbm/cli/reference_tables.hpp"
#include "sbm/entangle.hpp"
#include "sbm/errors.hpp"
#include "sbm/gsi.hpp"

namespace sbm::cli {
namespace {

std::vector<std::string> model_columns(const ModelParams& model) {
  if (model.is_two_mode()) return {"n_spins", "ra", "rb", "kappa_a", "kappa_b"};
  return {"n_spins", "r", "kappa"};
}

/// With `blank_swept`, the coupling(s) driven by `axis` are left empty.
std::vector<Cell> model_cells(const ModelParams& model, bool blank_swept = false,
                              CouplingAxis axis = CouplingAxis::tied) {
  const auto n = static_cast<long long>(model.n_spins);
  const Cell blank = std::string();
  if (model.is_two_mode()) {
    const bool blank_a = blank_swept && axis != CouplingAxis::mode_b;
    const bool blank_b = blank_swept && axis != CouplingAxis::mode_a;
    return {n, model.first_mode_detuning_ra, model.second_mode->detuning_rb,
            blank_a ? blank : Cell(model.coupling_kappa),
            blank_b ? blank : Cell(model.second_mode->coupling_kappa_b)};
  }
  return {n, model.detuning_r, blank_swept ? blank : Cell(model.coupling_kappa)};
}

ResultTable with_model_columns(const ModelParams& model, std::vector<std::string> columns) {
  ResultTable table;
  table.columns = model_columns(model);
  table.columns.insert(table.columns.end(), columns.begin(), columns.end());
  return table;
}

void append(std::vector<Cell>& row, std::vector<Cell> tail) {
  row.insert(row.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
}

ResultTable spectrum(const RunConfig& config) {
  ResultTable table = with_model_columns(config.model, {"lambda", "energy", "ground_lambda"});
  const Excitation first = Excitation::lowest(config.model.n_spins);
  for (double kappa : config.kappa_range->points()) {
    const ModelParams params = with_coupling(config.model, kappa, config.axis);
    const GroundStateSolution ground = ground_state_at(params);
    for (Excitation lambda = first; lambda <= config.lambda_max; lambda = lambda.next()) {
      std::vector<Cell> row = model_cells(params);
      append(row, {lambda.str(), block_ground_energy(params, lambda), ground.lambda_star.str()});
      table.add_row(std::move(row));
    }
  }
  return table;
}

ResultTable gsi(const RunConfig& config) {
  ResultTable table = with_model_columns(
      config.model, {"start_lambda", "lambda_from", "lambda_to", "kappa_tilde", "residual"});
  const GsiSequence sequence = gsi_sequence(config.model, config.lambda_max, config.axis);
  for (const auto& crossing : sequence.crossings) {
    std::vector<Cell> row = model_cells(config.model, true, config.axis);
    append(row, {sequence.start.str(), crossing.lambda_from.str(), crossing.lambda_to.str(),
                 crossing.kappa_tilde, crossing.residual});
    table.add_row(std::move(row));
  }
  return table;
}

std::string_view kink_name(KinkKind kind) {
  switch (kind) {
    case KinkKind::slope_jump: return "slope_jump";
    case KinkKind::clamp_onset: return "clamp_onset";
    case KinkKind::clamp_release: return "clamp_release";
  }
  return "";
}

ResultTable concurrence(const RunConfig& config) {
  ResultTable table = with_model_columns(
      config.model, {"row_type", "lambda_star", "energy", "concurrence", "detail"});
  const GridSpec& grid = *config.kappa_range;
  const ConcurrenceProfile profile =
      concurrence_profile(config.model, KappaRange{grid.lo, grid.hi, grid.steps}, config.axis);
  auto row_for = [&](double kappa) {
    return model_cells(with_coupling(config.model, kappa, config.axis));
  };
  for (std::size_t i = 0; i < profile.kappa_samples.size(); ++i) {
    std::vector<Cell> row = row_for(profile.kappa_samples[i]);
    append(row, {std::string("sample"), profile.lambda_star[i].str(),
                 profile.energies[i], profile.c_values[i], std::string()});
    table.add_row(std::move(row));
  }
  for (double kappa : profile.gsi_markers) {
    std::vector<Cell> row = row_for(kappa);
    append(row, {std::string("gsi"), std::string(), std::string(), std::string(),
                 std::string("level crossing")});
    table.add_row(std::move(row));
  }
  for (const auto& kink : profile.kink_markers) {
    std::vector<Cell> row = row_for(kink.kappa);
    append(row, {std::string("kink"), std::string(), std::string(), std::string(),
                 std::string(kink_name(kink.kind))});
    table.add_row(std::move(row));
  }
  return table;
}

ResultTable phase(const RunConfig& config) {
  const int n = config.model.n_spins;
  ResultTable table;
  table.columns = {"n_spins", "r", "kappa_first_analytic"};
  const Excitation first = Excitation::lowest(n);
  for (Excitation lambda = first; lambda <= config.lambda_max; lambda = lambda.next()) {
    table.columns.push_back("kappa_tilde_" + lambda.str());
  }
  const std::vector<double> r_values = config.r_range->points();
  const PhaseDiagram diagram = phase_diagram(n, r_values, config.lambda_max);
  for (std::size_t i = 0; i < diagram.r_values.size(); ++i) {
    std::vector<Cell> row{static_cast<long long>(n), diagram.r_values[i],
                          first_critical_analytic(n, diagram.r_values[i])};
    for (const auto& crossing : diagram.boundaries[i]) row.emplace_back(crossing.kappa_tilde);
    table.add_row(std::move(row));
  }
  return table;
}

ResultTable table_diff(const RunConfig& config, bool* check_failed) {
  ResultTable table;
  table.columns = {"table", "row", "column", "computed", "reference", "abs_diff", "tolerance", "pass"};
  const TableReport report = run_table(config.table_id);
  for (const auto& cell : report.cells) {
    table.add_row({static_cast<long long>(report.id), cell.row, cell.column, cell.computed,
                   cell.reference, cell.abs_diff(), cell.tolerance, cell.passed()});
  }
  if (check_failed) *check_failed = !report.all_passed();
  return table;
}

ResultTable certify(const RunConfig& config, bool* check_failed) {
  ResultTable table = with_model_columns(config.model, {"condition", "lambda", "passed", "detail"});
  const CertificationReport report = certify_sequential_gsi(config.model, config.lambda_max);
  for (const auto& entry : report.entries) {
    std::vector<Cell> row = model_cells(config.model, true);
    append(row, {static_cast<long long>(entry.condition), entry.lambda.str(), entry.passed,
                 entry.detail});
    table.add_row(std::move(row));
  }
  if (check_failed) *check_failed = !report.all_passed();
  return table;
}

}  // namespace

ResultTable run_sweep(const RunConfig& config, bool* check_failed) {
  if (check_failed) *check_failed = false;
  switch (config.command) {
    case Command::spectrum: return spectrum(config);
    case Command::gsi: return gsi(config);
    case Command::concurrence: return concurrence(config);
    case Command::phase_diagram: return phase(config);
    case Command::table: return table_diff(config, check_failed);
    case Command::certify: return certify(config, check_failed);
  }
  throw UsageError("unknown command");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_run_config(args);
  } catch (const HelpRequested& help) {
    out << help.text;
    return exit_ok;
  } catch (const UsageError& e) {
    fmt::print(err, "sbm: {}\n", e.what());
    return exit_usage;
  }

  bool check_failed = false;
  try {
    const ResultTable table = run_sweep(config, &check_failed);
    if (config.out_path) {
      std::ofstream file(*config.out_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open " + *config.out_path + " for writing");
      write_table(file, table, config.format);
      file.close();
      if (!file) throw std::runtime_error("write to " + *config.out_path + " failed");
    } else {
      write_table(out, table, config.format);
    }
  } catch (const std::exception& e) {
    fmt::print(err, "sbm: {}\n", e.what());
    return exit_runtime;
  }
  if (check_failed) {
    fmt::print(err, "sbm: {} check(s) failed\n", command_name(config.command));
    return exit_check_failed;
  }
  return exit_ok;
}

}  // namespace sbm::cli
