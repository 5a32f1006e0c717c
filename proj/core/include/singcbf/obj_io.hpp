#pragma once

#include <string>

#include "singcbf/triangle_mesh.hpp"

namespace singcbf {

/// Wavefront OBJ with one `o component_<id>` group per connected
/// component, faces 1-based, coordinates at 9 significant digits.
std::string mesh_to_obj(const TriangleMesh& mesh);

}  // namespace singcbf
