#include "singcbf/point_cloud.hpp"

#include <limits>

namespace singcbf {

PointCloud scale_to_unit_cube(const std::vector<Eigen::Vector3d>& points) {
  if (points.empty())
    throw ContractViolation("scale_to_unit_cube: empty point cloud");

  Eigen::Vector3d lo = points.front();
  Eigen::Vector3d hi = points.front();
  for (const auto& p : points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }

  PointCloud cloud;
  cloud.scale.lo = lo;
  cloud.scale.extent = hi - lo;  // zero extent handled by ScaleMap
  cloud.points.reserve(points.size());
  for (const auto& p : points) cloud.points.push_back(cloud.scale.to_unit(p));
  return cloud;
}

ScaleMap scale_from_grid(const GridSpec& grid) {
  if (grid.dims() != 3)
    throw ContractViolation("scale_from_grid: grid must have 3 axes");
  ScaleMap s;
  for (int a = 0; a < 3; ++a) {
    s.lo[a] = grid.axes[a].lo;
    s.extent[a] = grid.axes[a].hi - grid.axes[a].lo;
  }
  return s;
}

}  // namespace singcbf
