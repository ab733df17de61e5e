#include <doctest.h>

#include <algorithm>

#include "tightfold/shapes.hpp"
#include "tightfold/tour.hpp"

using namespace tightfold;

namespace {

// Tetrahedron faces: 0={0,1,2}, 1={0,1,3}, 2={1,2,3}, 3={0,2,3}.
// The classic single-component tour (0,f0,1,f1,3,f2,2,f3,0).
VertexFaceTour tetra_tour(const PlaneGraph& g) {
  return tour_from_components(g, {{{0, 0}, {1, 1}, {3, 2}, {2, 3}}});
}

}  // namespace

TEST_CASE("tetrahedron tour validates with one component") {
  auto g = make_tetrahedron().graph;
  auto t = tetra_tour(g);
  CHECK(validate_spanning_tour(g, t).ok);
  auto comps = components(t);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].size() == 4);
}

TEST_CASE("broken pairing is reported") {
  auto g = make_tetrahedron().graph;
  auto t = tetra_tour(g);
  t.partner[t.end_at(0, 1)] = -1;  // break at vertex 1
  auto rep = validate_spanning_tour(g, t);
  CHECK_FALSE(rep.ok);
  CHECK(rep.message.find("unmatched") != std::string::npos);
}

TEST_CASE("missing face is reported") {
  auto g = make_tetrahedron().graph;
  auto t = tetra_tour(g);
  t.arcs[2] = {-1, -1};
  auto rep = validate_spanning_tour(g, t);
  CHECK_FALSE(rep.ok);
  CHECK(rep.message.find("not covered") != std::string::npos);
}

TEST_CASE("non-incident arc end is reported") {
  auto g = make_tetrahedron().graph;
  auto t = tetra_tour(g);
  t.arcs[0] = {0, 3};  // face 0 = {0,1,2} does not contain 3
  auto rep = validate_spanning_tour(g, t);
  CHECK_FALSE(rep.ok);
  CHECK(rep.message.find("non-incident") != std::string::npos);
}

TEST_CASE("switching swaps the shared-edge ends (tetrahedron labels)") {
  auto g = make_tetrahedron().graph;
  // arcs: f0={0,2}, f1={1,3}, f3={0,2}... build 2-component tour with the
  // switch pattern on shared edge {0,1} of f0={0,1,2} and f1={0,1,3}.
  auto t = tour_from_components(g, {{{0, 0}, {2, 3}}, {{1, 1}, {3, 2}}});
  REQUIRE(t.has_arc(0, 0, 2));
  REQUIRE(t.has_arc(1, 1, 3));
  auto r = switch_at(g, t, 0, 1);
  CHECK(r.has_arc(0, 1, 2));
  CHECK(r.has_arc(1, 0, 3));
  CHECK(validate_spanning_tour(g, r).ok);
  SUBCASE("switch is an involution") {
    auto rr = switch_at(g, r, 0, 1);
    CHECK(rr == t);
  }
  SUBCASE("switch across components merges them") {
    CHECK(components(t).size() == 2);
    CHECK(components(r).size() == 1);
  }
  SUBCASE("wrong pattern raises PatternMismatch") {
    // f0's arc is the shared edge itself
    auto bad = tour_from_components(g, {{{0, 0}, {1, 2}, {2, 3}, {3, 1}}});
    REQUIRE(bad.has_arc(0, 0, 1));
    CHECK_THROWS_AS(switch_at(g, bad, 0, 1), Error);
    CHECK_THROWS_AS(reflect_at(g, bad, 0, 1), Error);
  }
}

TEST_CASE("square pyramid: two disjoint cycles give two components") {
  auto g = make_pyramid(4).graph;
  // faces: 0=base{0,1,2,3}, 1={0,1,4}, 2={1,2,4}, 3={2,3,4}, 4={0,4,3}
  auto t = tour_from_components(g, {{{1, 1}, {4, 2}}, {{0, 0}, {2, 3}, {4, 4}}});
  CHECK(validate_spanning_tour(g, t).ok);
  CHECK(components(t).size() == 2);
}

TEST_CASE("recombine applies a batch of arc moves with local re-pairing") {
  auto g = make_pyramid(4).graph;
  auto t = tour_from_components(g, {{{1, 1}, {4, 2}}, {{0, 0}, {2, 3}, {4, 4}}});
  // rotate base arc (0,2) and triangle-3 arc (2,4) together onto vertex 3
  REQUIRE(t.arcs[0] == std::array<int, 2>{0, 2});
  REQUIRE(t.arcs[3] == std::array<int, 2>{2, 4});
  auto r = recombine(g, t, {{0, {0, 3}}, {3, {3, 4}}});
  CHECK(validate_spanning_tour(g, r).ok);
  CHECK(r.has_arc(0, 0, 3));
  CHECK(r.has_arc(3, 3, 4));

  SUBCASE("duplicate face in a batch is invalid") {
    CHECK_THROWS_AS(recombine(g, t, {{0, {0, 3}}, {0, {0, 1}}}), Error);
  }
  SUBCASE("a batch that breaks the matching is rolled back") {
    CHECK_THROWS_AS(recombine(g, t, {{0, {0, 3}}}), Error);
    // original untouched (recombine is by-value)
    CHECK(t.arcs[0] == std::array<int, 2>{0, 2});
  }
}

TEST_CASE("canonical component starts at the lowest face") {
  auto g = make_tetrahedron().graph;
  auto t = tetra_tour(g);
  auto canon = canonical_component(components(t)[0]);
  CHECK(canon[0].second == 0);
  auto txt = tour_debug_text(t);
  CHECK(txt.substr(0, 1) == "(");
  CHECK(txt.find('\n') == txt.size() - 1);
}

TEST_CASE("crossings: single pass never crosses") {
  auto g = make_tetrahedron().graph;
  auto t = tetra_tour(g);
  for (int v = 0; v < 4; ++v) CHECK(crossings_at(g, t, v).empty());
  CHECK(is_noncrossing(g, t));
}
