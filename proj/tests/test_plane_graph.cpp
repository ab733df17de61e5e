#include <doctest.h>

#include <algorithm>

#include "tightfold/shapes.hpp"

using namespace tightfold;

namespace {

PlaneGraph tetra() { return make_tetrahedron().graph; }

}  // namespace

TEST_CASE("tetrahedron builds with the expected counts") {
  auto g = tetra();
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 6);
  CHECK(g.face_count() == 4);
}

TEST_CASE("pentagonal antiprism counts") {
  auto g = make_antiprism(5).graph;
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 20);
  CHECK(g.face_count() == 12);
}

TEST_CASE("a face listed twice is rejected as non-manifold") {
  // cube face list with one face repeated (an edge would lie in 3 faces)
  std::vector<std::vector<int>> faces = {
      {0, 1, 2, 3}, {7, 6, 5, 4}, {0, 4, 5, 1}, {1, 5, 6, 2},
      {2, 6, 7, 3}, {3, 7, 4, 0}, {0, 1, 2, 3},
  };
  CHECK_THROWS_AS(build_plane_graph(8, faces), Error);
  try {
    build_plane_graph(8, faces);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonManifold);
  }
}

TEST_CASE("euler violation and connectivity are caught") {
  // two disjoint tetrahedra: V-E+F = 4
  std::vector<std::vector<int>> faces = {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3},
                                         {4, 5, 6}, {4, 7, 5}, {5, 7, 6}, {4, 6, 7}};
  CHECK_THROWS_AS(build_plane_graph(8, faces), Error);
}

TEST_CASE("tightness predicate") {
  CHECK(is_tight(make_pyramid(4).graph));
  CHECK(is_tight(make_snub_cube().graph));
  CHECK_FALSE(is_tight(make_truncated_cube().graph));
  CHECK(is_tight(make_antiprism(5).graph));
}

TEST_CASE("triangulation predicate") {
  CHECK(is_triangulation(make_octahedron().graph));
  CHECK_FALSE(is_triangulation(make_pyramid(4).graph));
  CHECK(is_triangulation(make_standard(6).graph));
}

TEST_CASE("faces_around_vertex matches degrees and the facial walks") {
  for (const auto& p : {make_tetrahedron(), make_octahedron(), make_pyramid(4)}) {
    const auto& g = p.graph;
    for (int v = 0; v < g.vertex_count(); ++v) {
      auto fan = g.faces_around_vertex(v);
      CHECK(static_cast<int>(fan.size()) == g.degree(v));
      for (int f = 0; f < g.face_count(); ++f) {
        bool in_fan = std::find(fan.begin(), fan.end(), f) != fan.end();
        CHECK(in_fan == g.face_contains(f, v));
      }
    }
  }
}

TEST_CASE("square pyramid apex sees four triangles") {
  auto g = make_pyramid(4).graph;
  auto fan = g.faces_around_vertex(4);  // apex id = n
  CHECK(fan.size() == 4);
  for (int f : fan) CHECK(g.is_triangle(f));
}

TEST_CASE("adjacent_face_across is the unique other face") {
  auto g = tetra();
  for (int f = 0; f < g.face_count(); ++f) {
    const auto& w = g.face(f);
    for (int i = 0; i < 3; ++i) {
      int u = w[i], v = w[(i + 1) % 3];
      int f2 = g.face_across(f, u, v);
      CHECK(f2 != f);
      CHECK(g.face_contains(f2, u));
      CHECK(g.face_contains(f2, v));
      CHECK(g.face_across(f2, u, v) == f);
    }
  }
  CHECK_THROWS_AS(g.face_across(0, 0, 3), Error);  // edge not on face 0
}

TEST_CASE("pyramid base flanked by its triangles") {
  auto g = make_pyramid(4).graph;
  REQUIRE(g.face_size(0) == 4);
  const auto& w = g.face(0);
  for (int i = 0; i < 4; ++i) {
    int f2 = g.face_across(0, w[i], w[(i + 1) % 4]);
    CHECK(g.is_triangle(f2));
    CHECK(g.face_contains(f2, 4));
  }
}

TEST_CASE("euler and incidence sums hold on all builtin shapes") {
  for (const char* name : {"tetrahedron", "octahedron", "icosahedron", "pyramid:4",
                           "pyramid:7", "antiprism:3", "antiprism:6", "snub-cube",
                           "truncated-cube", "standard:4", "standard:9"}) {
    auto g = builtin_shape(name).graph;
    long long sum_face = 0, sum_deg = 0;
    for (int f = 0; f < g.face_count(); ++f) sum_face += g.face_size(f);
    for (int v = 0; v < g.vertex_count(); ++v) sum_deg += g.degree(v);
    CHECK(g.vertex_count() - g.edge_count() + g.face_count() == 2);
    CHECK(sum_face == 2 * g.edge_count());
    CHECK(sum_deg == 2 * g.edge_count());
  }
}

TEST_CASE("snub cube and truncated cube have the catalog combinatorics") {
  auto sc = make_snub_cube().graph;
  CHECK(sc.vertex_count() == 24);
  CHECK(sc.edge_count() == 60);
  CHECK(sc.face_count() == 38);
  int squares = 0;
  for (int f = 0; f < sc.face_count(); ++f)
    if (sc.face_size(f) == 4) ++squares;
  CHECK(squares == 6);

  auto tc = make_truncated_cube().graph;
  CHECK(tc.vertex_count() == 24);
  CHECK(tc.edge_count() == 36);
  CHECK(tc.face_count() == 14);
  int octs = 0;
  for (int f = 0; f < tc.face_count(); ++f)
    if (tc.face_size(f) == 8) ++octs;
  CHECK(octs == 6);
}

TEST_CASE("standard triangulation structure") {
  auto g = make_standard(6).graph;
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 12);
  CHECK(g.face_count() == 8);
  CHECK(g.degree(0) == 5);
  CHECK(g.degree(1) == 5);
  CHECK(g.has_edge(0, 1));
  CHECK_THROWS_AS(make_standard(3), Error);
}
