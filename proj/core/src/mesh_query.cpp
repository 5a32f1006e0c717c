#include "singcbf/mesh_query.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace singcbf {

ClosestPointResult closest_point_on_triangle(const Eigen::Vector3d& query,
                                             const Eigen::Vector3d& a,
                                             const Eigen::Vector3d& b,
                                             const Eigen::Vector3d& c) {
  const Eigen::Vector3d ab = b - a;
  const Eigen::Vector3d ac = c - a;
  if (0.5 * ab.cross(ac).norm() <= 1e-12)
    throw DomainError("closest_point_on_triangle: degenerate triangle");

  ClosestPointResult res;
  auto finish = [&](const Eigen::Vector3d& p, Feature f) {
    res.point = p;
    res.distance = (query - p).norm();
    res.feature = f;
    return res;
  };

  // Voronoi region classification (vertex / edge / face).
  const Eigen::Vector3d ap = query - a;
  const double d1 = ab.dot(ap);
  const double d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) return finish(a, Feature::Vertex);

  const Eigen::Vector3d bp = query - b;
  const double d3 = ab.dot(bp);
  const double d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) return finish(b, Feature::Vertex);

  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0)
    return finish(a + (d1 / (d1 - d3)) * ab, Feature::Edge);

  const Eigen::Vector3d cp = query - c;
  const double d5 = ab.dot(cp);
  const double d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) return finish(c, Feature::Vertex);

  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0)
    return finish(a + (d2 / (d2 - d6)) * ac, Feature::Edge);

  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0)
    return finish(b + ((d4 - d3) / ((d4 - d3) + (d5 - d6))) * (c - b),
                  Feature::Edge);

  const double denom = 1.0 / (va + vb + vc);
  return finish(a + (vb * denom) * ab + (vc * denom) * ac, Feature::Face);
}

namespace {

struct Box {
  Eigen::Vector3d lo = Eigen::Vector3d::Constant(1e300);
  Eigen::Vector3d hi = Eigen::Vector3d::Constant(-1e300);

  void grow(const Eigen::Vector3d& p) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  void grow(const Box& b) {
    lo = lo.cwiseMin(b.lo);
    hi = hi.cwiseMax(b.hi);
  }
  double dist_sq(const Eigen::Vector3d& q) const {
    double d = 0.0;
    for (int a = 0; a < 3; ++a) {
      const double e = std::max({lo[a] - q[a], 0.0, q[a] - hi[a]});
      d += e * e;
    }
    return d;
  }
};

struct Node {
  Box box;
  int left = -1, right = -1;  // children, or leaf range when left < 0
  int begin = 0, end = 0;     // triangle-slot range for leaves
};

struct Tree {
  std::vector<Node> nodes;
  std::vector<int> tri_index;  // global triangle indices, leaf-grouped
};

}  // namespace

struct MeshQuery::Impl {
  TriangleMesh mesh;
  std::vector<Tree> trees;  // one per component

  static constexpr int kLeafSize = 4;

  Box tri_box(int t) const {
    Box b;
    for (int v : mesh.triangles[t]) b.grow(mesh.vertices[v]);
    return b;
  }

  Eigen::Vector3d tri_centroid(int t) const {
    const auto& tri = mesh.triangles[t];
    return (mesh.vertices[tri[0]] + mesh.vertices[tri[1]] +
            mesh.vertices[tri[2]]) /
           3.0;
  }

  int build(Tree& tree, int begin, int end) {
    Node node;
    for (int s = begin; s < end; ++s) node.box.grow(tri_box(tree.tri_index[s]));
    const int id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(node);
    if (end - begin <= kLeafSize) {
      tree.nodes[id].begin = begin;
      tree.nodes[id].end = end;
      return id;
    }
    const Eigen::Vector3d span = node.box.hi - node.box.lo;
    int axis = 0;
    if (span[1] > span[axis]) axis = 1;
    if (span[2] > span[axis]) axis = 2;
    const int mid = (begin + end) / 2;
    std::nth_element(tree.tri_index.begin() + begin,
                     tree.tri_index.begin() + mid,
                     tree.tri_index.begin() + end, [&](int ta, int tb) {
                       const double ca = tri_centroid(ta)[axis];
                       const double cb = tri_centroid(tb)[axis];
                       return ca < cb || (ca == cb && ta < tb);
                     });
    const int l = build(tree, begin, mid);
    const int r = build(tree, mid, end);
    tree.nodes[id].left = l;
    tree.nodes[id].right = r;
    return id;
  }
};

MeshQuery::MeshQuery(const TriangleMesh& mesh) : impl_(new Impl) {
  impl_->mesh = mesh;
  if (impl_->mesh.component_id.size() != impl_->mesh.triangles.size())
    split_components(impl_->mesh);

  impl_->trees.resize(impl_->mesh.num_components);
  for (int c = 0; c < impl_->mesh.num_components; ++c) {
    Tree& tree = impl_->trees[c];
    for (size_t t = 0; t < impl_->mesh.triangles.size(); ++t)
      if (impl_->mesh.component_id[t] == c)
        tree.tri_index.push_back(static_cast<int>(t));
    if (!tree.tri_index.empty())
      impl_->build(tree, 0, static_cast<int>(tree.tri_index.size()));
  }
}

MeshQuery::~MeshQuery() = default;
MeshQuery::MeshQuery(MeshQuery&&) noexcept = default;
MeshQuery& MeshQuery::operator=(MeshQuery&&) noexcept = default;

int MeshQuery::num_components() const { return impl_->mesh.num_components; }

ClosestPointResult MeshQuery::closest_point(int component_id,
                                            const Eigen::Vector3d& query) const {
  if (component_id < 0 || component_id >= impl_->mesh.num_components)
    throw ContractViolation("MeshQuery: unknown component id");
  const Tree& tree = impl_->trees[component_id];
  if (tree.tri_index.empty())
    throw ContractViolation("MeshQuery: empty component");

  ClosestPointResult best;
  best.distance = std::numeric_limits<double>::infinity();
  best.triangle = std::numeric_limits<int>::max();

  // Best-first descent. Pruning uses a strict bound so equal-distance
  // candidates still reach the lowest-index tie-break below, which keeps
  // results identical to a brute-force scan.
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    const Node& node = tree.nodes[id];
    if (node.box.dist_sq(query) > best.distance * best.distance) continue;
    if (node.left < 0) {
      for (int s = node.begin; s < node.end; ++s) {
        const int t = tree.tri_index[s];
        const auto& tri = impl_->mesh.triangles[t];
        ClosestPointResult cand = closest_point_on_triangle(
            query, impl_->mesh.vertices[tri[0]], impl_->mesh.vertices[tri[1]],
            impl_->mesh.vertices[tri[2]]);
        if (cand.distance < best.distance ||
            (cand.distance == best.distance && t < best.triangle)) {
          best = cand;
          best.triangle = t;
        }
      }
    } else {
      const double dl = tree.nodes[node.left].box.dist_sq(query);
      const double dr = tree.nodes[node.right].box.dist_sq(query);
      // Visit the nearer child first (pushed last).
      if (dl <= dr) {
        stack.push_back(node.right);
        stack.push_back(node.left);
      } else {
        stack.push_back(node.left);
        stack.push_back(node.right);
      }
    }
  }
  best.component_id = component_id;
  return best;
}

}  // namespace singcbf
