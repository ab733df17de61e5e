#include "tightfold/polyhedron.hpp"

#include <algorithm>
#include <string>

namespace tightfold {

std::vector<Vec3> Polyhedron::face_points(int f) const {
  std::vector<Vec3> pts;
  pts.reserve(graph.face_size(f));
  for (int v : graph.face(f)) pts.push_back(coords.at(v));
  return pts;
}

double Polyhedron::face_diameter(int f) const {
  auto pts = face_points(f);
  double d = 0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, dist(pts[i], pts[j]));
  return d;
}

double Polyhedron::model_diameter() const {
  double d = 0;
  for (size_t i = 0; i < coords.size(); ++i)
    for (size_t j = i + 1; j < coords.size(); ++j)
      d = std::max(d, dist(coords[i], coords[j]));
  return d;
}

std::vector<double> check_planarity_of_faces(const Polyhedron& p) {
  std::vector<double> residuals;
  residuals.reserve(p.graph.face_count());
  for (int f = 0; f < p.graph.face_count(); ++f) {
    auto pts = p.face_points(f);
    FitPlane pl = fit_plane(pts);
    double r = plane_residual(pl, pts);
    residuals.push_back(r);
    double diam = p.face_diameter(f);
    TF_CHECK(diam > 0, ErrorKind::FaceNotPlanar,
             "face " + std::to_string(f) + " is degenerate");
    if (r > kPlanarityTol * diam)
      fail(ErrorKind::FaceNotPlanar, "face " + std::to_string(f) + " residual " +
                                         std::to_string(r) + " exceeds tolerance");
  }
  return residuals;
}

Polyhedron Polyhedron::build_unchecked(PlaneGraph graph, std::vector<Vec3> coords) {
  Polyhedron p;
  p.graph = std::move(graph);
  p.coords = std::move(coords);
  TF_CHECK(static_cast<int>(p.coords.size()) == p.graph.vertex_count(),
           ErrorKind::IndexOutOfRange, "coordinate count does not match vertex count");
  p.planes.resize(p.graph.face_count());
  for (int f = 0; f < p.graph.face_count(); ++f) {
    auto pts = p.face_points(f);
    FitPlane pl = fit_plane(pts);
    Vec3 outward = newell_normal(pts).normalized();
    // orient the fitted normal along the walk orientation
    Vec3 n = pl.normal.dot(outward) >= 0 ? pl.normal : pl.normal * -1.0;
    p.planes[f] = FacePlane{pl.centroid, n, plane_residual(pl, pts)};
  }
  return p;
}

Polyhedron Polyhedron::build(PlaneGraph graph, std::vector<Vec3> coords) {
  Polyhedron p = build_unchecked(std::move(graph), std::move(coords));
  check_planarity_of_faces(p);
  // Consecutive corners must be distinct points.
  for (int f = 0; f < p.graph.face_count(); ++f) {
    const auto& walk = p.graph.face(f);
    int m = static_cast<int>(walk.size());
    for (int i = 0; i < m; ++i) {
      double d = dist(p.coords[walk[i]], p.coords[walk[(i + 1) % m]]);
      TF_CHECK(d > 0, ErrorKind::FaceNotPlanar,
               "face " + std::to_string(f) + " has coincident consecutive corners");
    }
  }
  return p;
}

}  // namespace tightfold
