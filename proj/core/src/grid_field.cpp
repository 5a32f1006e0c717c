#include "singcbf/grid_field.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "singcbf/csv.hpp"
#include "singcbf/gram.hpp"

namespace singcbf {

void GridField::validate() const {
  grid.validate();
  if (grid.dims() != 3)
    throw ContractViolation("GridField: exactly 3 axes required");
  if (static_cast<long>(values.size()) != grid.total_nodes())
    throw ContractViolation("GridField: value count != grid nodes");
  for (double v : values)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw ContractViolation("GridField: values must be finite and >= 0");
}

std::string GridField::to_csv() const {
  validate();
  std::string out;
  for (int a = 0; a < 3; ++a) {
    out += 'x';
    out += std::to_string(a + 1);
    out += ':';
    out += std::to_string(grid.axes[a].count);
    out += ',';
  }
  out += "value\n";
  const long total = grid.total_nodes();
  for (long idx = 0; idx < total; ++idx) {
    const auto mi = grid.unflatten(idx);
    for (int a = 0; a < 3; ++a) {
      out += format_g9(grid.coord(a, mi[a]));
      out += ',';
    }
    out += format_g9(values[idx]);
    out += '\n';
  }
  return out;
}

GridField GridField::from_csv_text(const std::string& text) {
  const CsvTable table = parse_csv(text);
  if (table.columns.size() != 4 || table.columns[3] != "value")
    throw Error("GridField: expected header x1:N,x2:N,x3:N,value");

  GridField field;
  field.grid.axes.resize(3);
  for (int a = 0; a < 3; ++a) {
    const std::string& col = table.columns[a];
    const auto sep = col.find(':');
    if (sep == std::string::npos)
      throw Error("GridField: axis header missing count: " + col);
    field.grid.axes[a].count = std::stoi(col.substr(sep + 1));
  }
  long expected = 1;
  for (int a = 0; a < 3; ++a) expected *= field.grid.axes[a].count;
  if (static_cast<long>(table.rows.size()) != expected)
    throw Error("GridField: row count does not match axis counts");

  // Ranges come from the data; traversal order is row-major with the last
  // axis fastest, so the first and last rows carry the per-axis extremes.
  for (int a = 0; a < 3; ++a) {
    field.grid.axes[a].lo = table.rows.front()[a];
    field.grid.axes[a].hi = table.rows.back()[a];
  }
  field.values.reserve(table.rows.size());
  for (const auto& row : table.rows) field.values.push_back(row[3]);
  field.validate();
  return field;
}

GridField GridField::from_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open grid field file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_csv_text(ss.str());
}

GridField sample_sigma_field(const SystemModel& model, const GridSpec& grid) {
  grid.validate();
  if (grid.dims() != 3)
    throw ContractViolation("sample_sigma_field: grid must have 3 axes");
  if (model.n != 3)
    throw ContractViolation("sample_sigma_field: model must have n = 3");

  GridField field;
  field.grid = grid;
  const long total = grid.total_nodes();
  field.values.reserve(total);
  for (long idx = 0; idx < total; ++idx) {
    const StateVector x = grid.node(grid.unflatten(idx));
    field.values.push_back(smallest_singular_value(mapping_matrix(model, x)));
  }
  return field;
}

}  // namespace singcbf
