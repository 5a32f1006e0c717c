#include "singcbf/obj_io.hpp"

#include "singcbf/csv.hpp"

namespace singcbf {

std::string mesh_to_obj(const TriangleMesh& mesh) {
  std::string out;
  out += "# singcbf configuration-space obstacle mesh\n";
  for (const auto& v : mesh.vertices) {
    out += "v ";
    out += format_g9(v[0]);
    out += ' ';
    out += format_g9(v[1]);
    out += ' ';
    out += format_g9(v[2]);
    out += '\n';
  }
  // Faces grouped by component, ascending id, original order within each.
  for (int c = 0; c < mesh.num_components; ++c) {
    out += "o component_" + std::to_string(c) + "\n";
    for (size_t t = 0; t < mesh.triangles.size(); ++t) {
      if (mesh.component_id[t] != c) continue;
      const auto& tri = mesh.triangles[t];
      out += "f " + std::to_string(tri[0] + 1) + " " +
             std::to_string(tri[1] + 1) + " " + std::to_string(tri[2] + 1) +
             "\n";
    }
  }
  return out;
}

}  // namespace singcbf
