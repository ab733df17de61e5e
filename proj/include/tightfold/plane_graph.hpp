#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tightfold/error.hpp"

namespace tightfold {

// Combinatorial embedding of a sphere graph. Faces are the primary data:
// each face is a simple cyclic vertex walk, counterclockwise as seen from
// outside, and every undirected edge is traversed exactly once in each
// direction. The rotation system and edge maps are derived.
//
// Identifiers are dense: vertices 0..V-1, faces 0..F-1. Walks are stored
// rotated so the lowest vertex id comes first; surgery preserves ids of
// untouched faces.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  // Full validation: manifoldness, simplicity, Euler relation, and
  // 3-connectivity (exhaustive 2-vertex removal).
  static PlaneGraph from_faces(int vertex_count, std::vector<std::vector<int>> faces);

  // Light validation only (manifoldness, simplicity, Euler). Used by graph
  // surgery whose operations preserve 3-connectivity.
  static PlaneGraph from_faces_light(int vertex_count,
                                     std::vector<std::vector<int>> faces);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return edge_count_; }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<int>& face(int f) const { return faces_.at(f); }
  int face_size(int f) const { return static_cast<int>(faces_.at(f).size()); }
  bool is_triangle(int f) const { return face_size(f) == 3; }

  const std::vector<int>& rotation(int v) const { return rotation_.at(v); }
  int degree(int v) const { return static_cast<int>(rotation_.at(v).size()); }

  bool has_edge(int u, int v) const;
  // Face whose walk contains the directed edge u -> v; -1 if absent.
  int face_with_corner(int u, int v) const;
  // The unique other face sharing undirected edge {u, v} with f.
  int face_across(int f, int u, int v) const;
  // Position of v on f's walk; -1 if absent.
  int index_on_face(int f, int v) const;
  bool face_contains(int f, int v) const { return index_on_face(f, v) >= 0; }
  // Remaining vertex of a triangular face besides u and v.
  int third_vertex(int f, int u, int v) const;
  // Faces incident to v in rotation order (length deg(v)).
  std::vector<int> faces_around_vertex(int v) const;

  // Stable content hash of (V, face walks).
  std::uint64_t content_hash() const;

  bool same_labeled_graph(const PlaneGraph& other) const;

 private:
  static PlaneGraph build(int vertex_count, std::vector<std::vector<int>> faces,
                          bool check_three_connected);
  void derive();
  void check_three_connectivity() const;

  int vertex_count_ = 0;
  int edge_count_ = 0;
  std::vector<std::vector<int>> faces_;
  std::vector<std::vector<int>> rotation_;
  std::unordered_map<std::uint64_t, int> corner_face_;  // directed edge -> face
};

bool is_tight(const PlaneGraph& g);
bool is_triangulation(const PlaneGraph& g);

// build_plane_graph with full validation; same as PlaneGraph::from_faces.
PlaneGraph build_plane_graph(int vertex_count, std::vector<std::vector<int>> faces);

}  // namespace tightfold
