#include <doctest.h>

#include <cmath>

#include "tightfold/shapes.hpp"

using namespace tightfold;

TEST_CASE("builtin shapes are planar to machine precision") {
  for (const char* name :
       {"tetrahedron", "antiprism:5", "snub-cube", "pyramid:6", "standard:7"}) {
    auto p = builtin_shape(name);
    auto res = check_planarity_of_faces(p);
    for (double r : res) CHECK(r <= 1e-12);
  }
}

TEST_CASE("a lifted cube corner is not planar") {
  std::vector<std::vector<int>> faces = {{0, 1, 2, 3}, {7, 6, 5, 4}, {0, 4, 5, 1},
                                         {1, 5, 6, 2}, {2, 6, 7, 3}, {3, 7, 4, 0}};
  std::vector<Vec3> pts = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                           {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
  auto g = build_plane_graph(8, faces);
  CHECK_NOTHROW(Polyhedron::build(g, pts));
  pts[6].z += 0.1;  // lift one corner
  auto bad = Polyhedron::build_unchecked(g, pts);
  CHECK_THROWS_AS(check_planarity_of_faces(bad), Error);
  try {
    check_planarity_of_faces(bad);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FaceNotPlanar);
  }
}

TEST_CASE("antiprism pentagon is exactly planar and regular") {
  auto p = make_antiprism(5);
  auto res = check_planarity_of_faces(p);
  CHECK(res[0] <= 1e-12);  // top pentagon
  // all sides equal (uniform antiprism)
  const auto& g = p.graph;
  double side = -1;
  for (int f = 0; f < g.face_count(); ++f) {
    const auto& w = g.face(f);
    for (size_t i = 0; i < w.size(); ++i) {
      double d = dist(p.coords[w[i]], p.coords[w[(i + 1) % w.size()]]);
      if (side < 0) side = d;
      CHECK(d == doctest::Approx(side).epsilon(1e-12));
    }
  }
}

TEST_CASE("newell normals agree with plane fits on builtin shapes") {
  auto p = make_icosahedron();
  for (int f = 0; f < p.graph.face_count(); ++f) {
    auto pts = p.face_points(f);
    Vec3 n = newell_normal(pts).normalized();
    CHECK(std::abs(n.dot(p.planes[f].normal)) == doctest::Approx(1.0).epsilon(1e-9));
    // outward: points away from the origin-centered solid
    CHECK(n.dot(p.planes[f].centroid) > 0);
  }
}
