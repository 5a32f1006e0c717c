#pragma once

#include <Eigen/Core>
#include <vector>

#include "singcbf/errors.hpp"
#include "singcbf/grid.hpp"

namespace singcbf {

/// Per-axis affine map between raw coordinates and the unit cube.
/// Degenerate axes (zero extent) map to 0.5 and back to their single
/// value.
struct ScaleMap {
  Eigen::Vector3d lo = Eigen::Vector3d::Zero();
  Eigen::Vector3d extent = Eigen::Vector3d::Ones();

  Eigen::Vector3d to_unit(const Eigen::Vector3d& x) const {
    Eigen::Vector3d s;
    for (int i = 0; i < 3; ++i)
      s[i] = extent[i] > 0.0 ? (x[i] - lo[i]) / extent[i] : 0.5;
    return s;
  }
  Eigen::Vector3d from_unit(const Eigen::Vector3d& s) const {
    Eigen::Vector3d x;
    for (int i = 0; i < 3; ++i)
      x[i] = extent[i] > 0.0 ? lo[i] + s[i] * extent[i] : lo[i];
    return x;
  }
};

/// Point cloud stored in unit-cube coordinates together with the map back
/// to raw coordinates.
struct PointCloud {
  std::vector<Eigen::Vector3d> points;  // in [0,1]^3
  ScaleMap scale;
};

/// Per-axis min -> 0, max -> 1. Throws on an empty cloud.
PointCloud scale_to_unit_cube(const std::vector<Eigen::Vector3d>& points);

/// Scale map spanning a 3-axis grid's ranges.
ScaleMap scale_from_grid(const GridSpec& grid);

}  // namespace singcbf
