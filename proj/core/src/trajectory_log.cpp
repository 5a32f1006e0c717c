#include "singcbf/trajectory_log.hpp"

#include <cmath>

#include "singcbf/csv.hpp"

namespace singcbf {

void TrajectoryLog::append(std::vector<double> row) {
  if (row.size() != columns.size())
    throw ContractViolation("TrajectoryLog: row width != column count");
  rows.push_back(std::move(row));
}

int TrajectoryLog::column_index(const std::string& name) const {
  for (size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<double> TrajectoryLog::column(const std::string& name) const {
  const int idx = column_index(name);
  if (idx < 0) throw Error("TrajectoryLog: no column named " + name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[idx]);
  return out;
}

void TrajectoryLog::check_invariants(double dt, double t_end) const {
  const long expected = std::lround(t_end / dt) + 1;
  if (static_cast<long>(rows.size()) != expected)
    throw Error("TrajectoryLog: row count != t_end/dt + 1");
  const int t_idx = column_index("t");
  if (t_idx != 0) throw Error("TrajectoryLog: first column must be t");
  for (size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i][0] > rows[i - 1][0]))
      throw Error("TrajectoryLog: time not strictly increasing");
}

std::string TrajectoryLog::to_csv() const {
  CsvTable table;
  table.columns = columns;
  table.rows = rows;
  return ::singcbf::to_csv(table);
}

TrajectoryLog TrajectoryLog::from_csv_text(const std::string& text) {
  const CsvTable table = parse_csv(text);
  TrajectoryLog log;
  log.columns = table.columns;
  log.rows = table.rows;
  return log;
}

TrajectoryLog TrajectoryLog::from_csv_file(const std::string& path) {
  const CsvTable table = read_csv_file(path);
  TrajectoryLog log;
  log.columns = table.columns;
  log.rows = table.rows;
  return log;
}

}  // namespace singcbf
