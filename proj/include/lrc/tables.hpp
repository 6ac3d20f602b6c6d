#ifndef LRC_TABLES_HPP
#define LRC_TABLES_HPP

// Reference parameter tables for two benchmark code families, with the
// expected (m, kappa, v) values embedded as data so the `tables` command is
// a self-contained regression gate.

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "lrc/code.hpp"
#include "lrc/field.hpp"
#include "lrc/metrics.hpp"

namespace lrc {

struct ReferenceTable {
  std::string name;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::size_t dims = 0;  // n, with A_i the full field
  std::vector<int> deltas;
  std::vector<int> d_values;
  std::vector<long long> expected_m;
  std::vector<long long> expected_kappa;
  std::vector<long long> expected_v;
};

inline const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> tables = {
      {"GF(11)^3, deltas {4,5,6}",
       11,
       1,
       3,
       {4, 5, 6},
       {4, 5, 8, 10, 12, 14, 15, 16, 17, 18},
       std::vector<long long>(10, 1331),
       {35, 56, 150, 221, 280, 316, 326, 332, 335, 336},
       {847, 726, 440, 352, 264, 200, 180, 160, 140, 120}},
      {"GF(25)^2, deltas {6,7}",
       5,
       2,
       2,
       {6, 7},
       {5, 6, 14, 15, 26, 27, 28, 35, 36, 37},
       std::vector<long long>(10, 625),
       {21, 28, 120, 136, 314, 325, 335, 377, 379, 380},
       {500, 475, 275, 250, 108, 102, 96, 54, 48, 42}}};
  return tables;
}

/// The code of one table column: full-field subsets with the table's deltas.
inline CodeSpec reference_spec(const ReferenceTable& t, int d) {
  const FiniteField field(t.p, t.k);
  std::vector<std::vector<FieldElement>> subsets(t.dims, field.elements());
  return CodeSpec(field, std::move(subsets), t.deltas, d);
}

struct TableCheck {
  bool ok = true;
  std::string text;        // rendered table
  std::vector<std::string> diffs;  // one line per mismatching cell
};

inline TableCheck check_reference_table(const ReferenceTable& t) {
  TableCheck res;
  const std::size_t cols = t.d_values.size();
  std::vector<long long> got_m(cols), got_kappa(cols), got_v(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const CodeMetrics cm = compute_metrics(reference_spec(t, t.d_values[c]));
    got_m[c] = static_cast<long long>(cm.length);
    got_kappa[c] = cm.dimension;
    got_v[c] = cm.min_distance;
  }

  auto diff_row = [&](const char* row, const std::vector<long long>& got,
                      const std::vector<long long>& want) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (got[c] != want[c]) {
        res.ok = false;
        res.diffs.push_back(t.name + ": d=" + std::to_string(t.d_values[c]) + " " + row +
                            ": computed " + std::to_string(got[c]) + ", expected " +
                            std::to_string(want[c]));
      }
    }
  };
  diff_row("m", got_m, t.expected_m);
  diff_row("kappa", got_kappa, t.expected_kappa);
  diff_row("v", got_v, t.expected_v);

  std::ostringstream out;
  out << t.name << "\n";
  auto row = [&](const char* label, auto value_of) {
    out << label;
    for (std::size_t c = 0; c < cols; ++c) out << "\t" << value_of(c);
    out << "\n";
  };
  row("d", [&](std::size_t c) { return t.d_values[c]; });
  row("m", [&](std::size_t c) { return got_m[c]; });
  row("kappa", [&](std::size_t c) { return got_kappa[c]; });
  row("v", [&](std::size_t c) { return got_v[c]; });
  res.text = out.str();
  return res;
}

}  // namespace lrc

#endif  // LRC_TABLES_HPP
