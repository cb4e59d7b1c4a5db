#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "bctk/errors.hpp"

namespace bctk {

/// A regular class-T2 toroid on the n x n torus grid: n^2 vertices (the
/// images of the nth roots of unity under the standard torus embedding),
/// 2n^2 edges, n^2 quadrilateral faces, Euler number 0, every vertex of
/// degree 4.
struct ToroidMesh {
    int n = 0;
    double major_radius = 0.0;
    double minor_radius = 0.0;
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<int, 2>> edges;   // 0-based vertex indices
    std::vector<std::array<int, 4>> faces;   // 0-based, quads
};

/// Builds the toroid realizing U_n. Requires n >= 3 and R > r > 0.
ToroidMesh toroid_mesh(int n, double major_radius = 2.0,
                       double minor_radius = 1.0);

/// Wavefront OBJ with v / l / f records and 1-based indices.
void write_obj(const ToroidMesh& mesh, std::ostream& out);
std::string to_obj(const ToroidMesh& mesh);

/// JSON document with a schema_version field.
std::string to_json(const ToroidMesh& mesh);

}  // namespace bctk
