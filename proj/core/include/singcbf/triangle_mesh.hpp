#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

namespace singcbf {

struct TriangleMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<int> component_id;  // one per triangle
  int num_components = 0;

  bool empty() const { return triangles.empty(); }
};

/// Splits triangles into connected components over shared vertices
/// (union-find). Ids are assigned in order of each component's lowest
/// triangle index. Returns the number of components.
int split_components(TriangleMesh& mesh);

}  // namespace singcbf
