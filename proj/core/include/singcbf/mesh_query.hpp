#pragma once

#include <memory>

#include "singcbf/errors.hpp"
#include "singcbf/triangle_mesh.hpp"

namespace singcbf {

enum class Feature { Face, Edge, Vertex };

struct ClosestPointResult {
  Eigen::Vector3d point = Eigen::Vector3d::Zero();
  double distance = 0.0;
  int component_id = -1;
  Feature feature = Feature::Face;
  int triangle = -1;
};

/// Exact closest point on one triangle via barycentric region
/// classification (face, the three edges, the three vertices). Throws on
/// a degenerate triangle.
ClosestPointResult closest_point_on_triangle(const Eigen::Vector3d& query,
                                             const Eigen::Vector3d& a,
                                             const Eigen::Vector3d& b,
                                             const Eigen::Vector3d& c);

/// Closest-point queries against the components of a triangle mesh.
/// Builds one AABB tree per component; queries are exact (identical to a
/// brute-force scan, including the lowest-triangle-index tie-break) and
/// cost sublinear amortized. Immutable after construction, safe to share
/// across threads.
class MeshQuery {
 public:
  explicit MeshQuery(const TriangleMesh& mesh);
  ~MeshQuery();
  MeshQuery(MeshQuery&&) noexcept;
  MeshQuery& operator=(MeshQuery&&) noexcept;
  MeshQuery(const MeshQuery&) = delete;
  MeshQuery& operator=(const MeshQuery&) = delete;

  int num_components() const;

  /// Global minimum over the component's triangles. Throws on an unknown
  /// component id.
  ClosestPointResult closest_point(int component_id,
                                   const Eigen::Vector3d& query) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace singcbf
