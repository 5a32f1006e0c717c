#pragma once

#include <string>
#include <vector>

#include "singcbf/grid.hpp"
#include "singcbf/system_model.hpp"

namespace singcbf {

/// Scalar samples (smallest singular value) on a regular 3-axis grid,
/// stored row-major with the last axis fastest.
struct GridField {
  GridSpec grid;
  std::vector<double> values;

  double at(int i, int j, int k) const {
    const int nj = grid.axes[1].count;
    const int nk = grid.axes[2].count;
    return values[(static_cast<long>(i) * nj + j) * nk + k];
  }

  void validate() const;

  /// CSV with the axis counts in the header (`x1:40,x2:40,x3:60,value`),
  /// one node per row in traversal order, 9 significant digits.
  std::string to_csv() const;
  static GridField from_csv_text(const std::string& text);
  static GridField from_csv_file(const std::string& path);
};

/// sigma_min of phi(x) at every grid node.
GridField sample_sigma_field(const SystemModel& model, const GridSpec& grid);

}  // namespace singcbf
