#pragma once

#include <string>

#include "tightfold/polyhedron.hpp"

namespace tightfold {

// Builtin generators with exact closed-form coordinates. Recognized names:
// tetrahedron, octahedron, icosahedron, pyramid:n (n>=3), antiprism:n (n>=3),
// snub-cube, truncated-cube, standard:n (n>=4).
Polyhedron builtin_shape(const std::string& name);

Polyhedron make_tetrahedron();
Polyhedron make_octahedron();
Polyhedron make_icosahedron();
Polyhedron make_pyramid(int n);
Polyhedron make_antiprism(int n);
Polyhedron make_snub_cube();
Polyhedron make_truncated_cube();
// Double wheel: poles 0, 1; path vertices 2..n-1.
Polyhedron make_standard(int n);

}  // namespace tightfold
