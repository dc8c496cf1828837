#pragma once

#include <string>
#include <vector>

#include "sbm/model.hpp"

namespace sbm::cli {

enum class TableQuantity { critical_coupling, region_concurrence };

/// One row of a reference table: the model and the stored values, one per column.
struct ReferenceRow {
  std::string label;
  ModelParams model;
  std::vector<double> values;
};

struct ReferenceTable {
  int id = 0;
  std::string title;
  TableQuantity quantity = TableQuantity::region_concurrence;
  std::vector<std::string> columns;
  /// Column i is block λ = -N/2 + i (crossing out of it, or its region).
  std::vector<ReferenceRow> rows;
  double tolerance = 1e-3;
};

/// Stored reference values for tables 1..5. Throws std::out_of_range otherwise.
const ReferenceTable& reference_table(int id);

struct TableCell {
  std::string row;
  std::string column;
  double computed = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;

  double abs_diff() const;
  bool passed() const;
};

struct TableReport {
  int id = 0;
  std::vector<TableCell> cells;

  bool all_passed() const;
  int failures() const;
};

/// Recomputes every cell. A computation failure is rethrown as a
/// std::runtime_error naming the cell.
TableReport run_table(int id);

}  // namespace sbm::cli
