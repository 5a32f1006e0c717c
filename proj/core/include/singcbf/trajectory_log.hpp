#pragma once

#include <string>
#include <vector>

#include "singcbf/errors.hpp"

namespace singcbf {

/// Time series sampled at every integrator step. Column 0 is always `t`.
struct TrajectoryLog {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void append(std::vector<double> row);
  int column_index(const std::string& name) const;  // -1 when absent
  std::vector<double> column(const std::string& name) const;  // throws

  /// Monotone time and row count n_steps + 1.
  void check_invariants(double dt, double t_end) const;

  std::string to_csv() const;
  static TrajectoryLog from_csv_text(const std::string& text);
  static TrajectoryLog from_csv_file(const std::string& path);
};

}  // namespace singcbf
