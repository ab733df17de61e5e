#pragma once

#include <vector>

#include "tightfold/geometry.hpp"
#include "tightfold/plane_graph.hpp"

namespace tightfold {

// Relative tolerance for face planarity (times the face diameter).
inline constexpr double kPlanarityTol = 1e-9;

struct FacePlane {
  Vec3 centroid;
  Vec3 normal;  // unit, signed by the walk orientation (outward)
  double residual = 0;
};

struct Polyhedron {
  PlaneGraph graph;
  std::vector<Vec3> coords;
  std::vector<FacePlane> planes;

  // Validates planarity of every face and caches the plane certificates.
  static Polyhedron build(PlaneGraph graph, std::vector<Vec3> coords);
  // No planarity check; for feeding bad data to the checkers in tests.
  static Polyhedron build_unchecked(PlaneGraph graph, std::vector<Vec3> coords);

  std::vector<Vec3> face_points(int f) const;
  double face_diameter(int f) const;
  // Max pairwise vertex distance of the whole model.
  double model_diameter() const;
};

// Per-face max point-to-plane residual after a least-squares fit. Throws
// FaceNotPlanar if any residual exceeds kPlanarityTol times the face diameter.
std::vector<double> check_planarity_of_faces(const Polyhedron& p);

}  // namespace tightfold
