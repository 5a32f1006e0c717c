#pragma once

#include <utility>

#include "singcbf/grid_field.hpp"
#include "singcbf/marching_cubes.hpp"
#include "singcbf/mesh_query.hpp"
#include "singcbf/point_cloud.hpp"

namespace singcbf {

/// h = 1/2 (dist^2 - delta^2) and its gradient w.r.t. the query point,
/// with the closest point frozen at this instant.
std::pair<double, Eigen::Vector3d> distance_barrier_value_and_gradient(
    const Eigen::Vector3d& query, const ClosestPointResult& result,
    double delta);

/// Configuration-space obstacles built from a sigma_min grid: the field
/// is isosurfaced at `iso` in unit-cube coordinates (per-axis affine from
/// the grid ranges), so all distances and the margin delta live in scaled
/// units.
struct ConfigSpaceObstacles {
  TriangleMesh mesh;  // unit-cube coordinates
  ScaleMap scale;     // raw configuration <-> unit cube
};

ConfigSpaceObstacles build_config_obstacles(const GridField& sigma_field,
                                            double iso);

}  // namespace singcbf
