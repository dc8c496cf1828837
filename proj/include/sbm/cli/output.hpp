#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace sbm::cli {

/// Empty string renders as an empty CSV field / JSON null.
using Cell = std::variant<double, long long, bool, std::string>;

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class OutputFormat { csv, json };

/// 12 significant digits, '.' decimal point, independent of locale.
std::string format_number(double value);

/// Header row, ',' delimiter, fields quoted only when they need it.
void write_csv(std::ostream& os, const ResultTable& table);

/// Array of objects keyed by column name, one object per row.
void write_json(std::ostream& os, const ResultTable& table);

void write_table(std::ostream& os, const ResultTable& table, OutputFormat format);

}  // namespace sbm::cli
