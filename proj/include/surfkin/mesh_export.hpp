#ifndef SURFKIN_MESH_EXPORT_HPP
#define SURFKIN_MESH_EXPORT_HPP

#include <functional>
#include <string>

#include "surfkin/chart.hpp"

namespace surfkin {

struct ObjResult {
    std::string text;
    int vertex_count = 0;
    int face_count = 0;
    int dropped_faces = 0; // degenerate quads removed from the output
};

// Triangulates the nu×nv parameter grid over dom: (nu+1)×(nv+1) vertices,
// each quad split along the (i,j)→(i+1,j+1) diagonal.  Vertex lines carry
// 17 significant digits; face indices are 1-based.  Triangles whose area
// falls below 1e-14·(mean edge scale)² are dropped and counted.
ObjResult obj_from_grid(const std::function<Vec3(double, double)>& position,
                        const std::function<Vec3(double, double)>* normal,
                        const Domain& dom, int nu, int nv);

// Convenience wrappers: chart positions, with or without vertex normals.
ObjResult obj_from_chart(const Chart& chart, int nu, int nv, bool normals);

} // namespace surfkin

#endif
