#include "singcbf/obstacles.hpp"

namespace singcbf {

std::pair<double, Eigen::Vector3d> distance_barrier_value_and_gradient(
    const Eigen::Vector3d& query, const ClosestPointResult& result,
    double delta) {
  const Eigen::Vector3d grad = query - result.point;
  const double h = 0.5 * (grad.squaredNorm() - delta * delta);
  return {h, grad};
}

ConfigSpaceObstacles build_config_obstacles(const GridField& sigma_field,
                                            double iso) {
  sigma_field.validate();

  ConfigSpaceObstacles out;
  out.scale = scale_from_grid(sigma_field.grid);

  // Re-axis the field to [0,1] per axis; linear edge interpolation
  // commutes with the per-axis affine map, so this equals extracting in
  // raw coordinates and scaling the vertices.
  GridField unit = sigma_field;
  for (auto& axis : unit.grid.axes) {
    axis.lo = 0.0;
    axis.hi = 1.0;
  }
  out.mesh = extract_boundary_mesh(unit, iso);
  return out;
}

}  // namespace singcbf
