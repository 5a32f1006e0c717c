#include "singcbf/triangle_mesh.hpp"

#include <numeric>

namespace singcbf {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int split_components(TriangleMesh& mesh) {
  const int nv = static_cast<int>(mesh.vertices.size());
  const int nt = static_cast<int>(mesh.triangles.size());
  UnionFind uf(nv);
  for (const auto& t : mesh.triangles) {
    uf.unite(t[0], t[1]);
    uf.unite(t[1], t[2]);
  }

  mesh.component_id.assign(nt, -1);
  std::vector<int> id_of_root(nv, -1);
  int next_id = 0;
  for (int t = 0; t < nt; ++t) {
    const int root = uf.find(mesh.triangles[t][0]);
    if (id_of_root[root] < 0) id_of_root[root] = next_id++;
    mesh.component_id[t] = id_of_root[root];
  }
  mesh.num_components = next_id;
  return next_id;
}

}  // namespace singcbf
