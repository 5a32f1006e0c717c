#pragma once

#include "singcbf/grid_field.hpp"
#include "singcbf/triangle_mesh.hpp"

namespace singcbf {

/// Marching-cubes isosurface of the field at level `iso`, using the
/// classic fixed 256-case tables with linear interpolation along cell
/// edges. Vertices are deduplicated through canonical grid-edge keys so
/// the triangulation is watertight per cell face and the vertex order is
/// deterministic (cells traversed row-major, last axis fastest).
/// Degenerate triangles (area <= 1e-12 in the field's coordinates) are
/// dropped. Returns an empty mesh when iso is not strictly inside the
/// field's value range. Triangles carry connected-component ids.
TriangleMesh extract_boundary_mesh(const GridField& field, double iso);

}  // namespace singcbf
