#include "sbm/cli/reference_tables.hpp"

#include <cmath>
#include <stdexcept>

#include "sbm/entangle.hpp"
#include "sbm/gsi.hpp"

namespace sbm::cli {
namespace {

ModelParams single(int n, double r) { return ModelParams::single_mode(n, r, 0.0); }
ModelParams tied(double ra, double rb) { return ModelParams::two_mode(2, ra, rb, 0.0, 0.0); }

std::vector<ReferenceTable> build_tables() {
  std::vector<ReferenceTable> tables;

  ReferenceTable t1{1, "N=2 single-mode ground-state concurrence, maximum per region",
                    TableQuantity::region_concurrence, {"C0", "C1", "C2"}, {}, 1e-3};
  t1.rows = {
      {"r=-0.9", single(2, -0.9), {0.0977, 0.0425, 0.0327}},
      {"r=-0.5", single(2, -0.5), {0.3613, 0.0626, 0.0273}},
      {"r=0", single(2, 0.0), {0.5, 0.0286, 0.0101}},
      {"r=0.5", single(2, 0.5), {0.5691, 0.0124, 0.0040}},
      {"r=1", single(2, 1.0), {0.6667, 0.0035, 0.0008}},
      {"r=1.2", single(2, 1.2), {0.6875, 0.0010, 0.0}},
      {"r=1.3", single(2, 1.3), {0.6970, 0.0, 0.0}},
  };
  tables.push_back(std::move(t1));

  ReferenceTable t2{2, "N=3 single-mode pairwise concurrence, maximum per region",
                    TableQuantity::region_concurrence, {"C0", "C1", "C2", "C3", "C4"}, {}, 2e-3};
  t2.rows = {
      {"r=6", single(3, 6.0), {0.5833, 0.2944, 0.0029, 0.0007, 0.0002}},
      {"r=7.2", single(3, 7.2), {0.5942, 0.3126, 0.0017, 0.0002, 0.0}},
      {"r=8", single(3, 8.0), {0.6, 0.3233, 0.0011, 0.0, 0.0}},
      {"r=10", single(3, 10.0), {0.6111, 0.3460, 0.0, 0.0, 0.0}},
  };
  tables.push_back(std::move(t2));

  ReferenceTable t3{3, "N=2 two-mode critical couplings, kappa_a = kappa_b, mode b detuned",
                    TableQuantity::critical_coupling, {"kappa_-1", "kappa_0", "kappa_1", "kappa_2"},
                    {}, 1e-3};
  t3.rows = {
      {"single-mode r=0", single(2, 0.0), {0.7071, 0.9660, 1.4029, 1.7260}},
      {"rb=-0.9", tied(0.0, -0.9), {0.2132, 0.2248, 0.2371, 0.2498}},
      {"rb=-0.1", tied(0.0, -0.1), {0.4867, 0.6586, 0.9425, 1.1569}},
      {"rb=0.1", tied(0.0, 0.1), {0.5118, 0.7043, 1.0354, 1.2758}},
      {"rb=1", tied(0.0, 1.0), {0.5774, 0.8158, 1.2518, 1.5477}},
      {"rb=10", tied(0.0, 10.0), {0.6770, 0.9393, 1.3910, 1.7197}},
      {"rb=100", tied(0.0, 100.0), {0.7036, 0.9630, 1.4012, 1.7247}},
  };
  tables.push_back(std::move(t3));

  ReferenceTable t4{4, "N=2 two-mode concurrence, kappa_a = kappa_b, mode b detuned",
                    TableQuantity::region_concurrence, {"C0", "C1", "C2"}, {}, 2e-3};
  t4.rows = {
      {"single-mode r=0", single(2, 0.0), {0.5, 0.0286, 0.0101}},
      {"rb=-0.9", tied(0.0, -0.9), {0.1074, 0.0508, 0.0394}},
      {"rb=-0.1", tied(0.0, -0.1), {0.4898, 0.0324, 0.0114}},
      {"rb=1", tied(0.0, 1.0), {0.5455, 0.0211, 0.0075}},
      {"rb=1.8", tied(0.0, 1.8), {0.5462, 0.0226, 0.0084}},
      {"rb=5", tied(0.0, 5.0), {0.5381, 0.0316, 0.0135}},
      {"rb=10", tied(0.0, 10.0), {0.5253, 0.0348, 0.0161}},
  };
  tables.push_back(std::move(t4));

  ReferenceTable t5{5, "N=2 two-mode concurrence, kappa_a = kappa_b, ra=1.2",
                    TableQuantity::region_concurrence, {"C0", "C1", "C2"}, {}, 2e-3};
  t5.rows = {
      {"rb=1", tied(1.2, 1.0), {0.6764, 0.0023, 0.0004}},
      {"rb=1.1", tied(1.2, 1.1), {0.6823, 0.0016, 0.0002}},
      {"rb=1.3", tied(1.2, 1.3), {0.6921, 0.0005, 0.0}},
      {"rb=1.5", tied(1.2, 1.5), {0.6998, 0.0, 0.0}},
      {"rb=100", tied(1.2, 100.0), {0.6920, 0.0043, 0.0035}},
      {"rb=10000", tied(1.2, 10000.0), {0.6875, 0.0011, 0.0}},
  };
  tables.push_back(std::move(t5));
  return tables;
}

double compute_cell(const ReferenceTable& table, const ReferenceRow& row, int column) {
  const Excitation lambda = Excitation::lowest(row.model.n_spins).shifted(column);
  if (table.quantity == TableQuantity::critical_coupling) {
    return find_critical_coupling(row.model, lambda).kappa_tilde;
  }
  return region_max_concurrence(row.model, lambda.next());
}

}  // namespace

const ReferenceTable& reference_table(int id) {
  static const std::vector<ReferenceTable> tables = build_tables();
  if (id < 1 || id > static_cast<int>(tables.size())) {
    throw std::out_of_range("no table " + std::to_string(id));
  }
  return tables[id - 1];
}

double TableCell::abs_diff() const { return std::abs(computed - reference); }

bool TableCell::passed() const { return abs_diff() <= tolerance; }

bool TableReport::all_passed() const { return failures() == 0; }

int TableReport::failures() const {
  int count = 0;
  for (const auto& cell : cells) count += cell.passed() ? 0 : 1;
  return count;
}

TableReport run_table(int id) {
  const ReferenceTable& table = reference_table(id);
  TableReport report{id, {}};
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      TableCell cell{row.label, table.columns[c], 0.0, row.values[c], table.tolerance};
      try {
        cell.computed = compute_cell(table, row, static_cast<int>(c));
      } catch (const std::exception& e) {
        throw std::runtime_error("table " + std::to_string(id) + ", row " + row.label +
                                 ", column " + table.columns[c] + ": " + e.what());
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

}  // namespace sbm::cli
