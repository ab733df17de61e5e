#include "tightfold/plane_graph.hpp"

#include <algorithm>
#include <string>

namespace tightfold {

namespace {

inline std::uint64_t dir_key(int u, int v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

void rotate_to_lowest(std::vector<int>& walk) {
  auto it = std::min_element(walk.begin(), walk.end());
  std::rotate(walk.begin(), it, walk.end());
}

}  // namespace

PlaneGraph PlaneGraph::from_faces(int vertex_count, std::vector<std::vector<int>> faces) {
  return build(vertex_count, std::move(faces), true);
}

PlaneGraph PlaneGraph::from_faces_light(int vertex_count,
                                        std::vector<std::vector<int>> faces) {
  return build(vertex_count, std::move(faces), false);
}

PlaneGraph build_plane_graph(int vertex_count, std::vector<std::vector<int>> faces) {
  return PlaneGraph::from_faces(vertex_count, std::move(faces));
}

PlaneGraph PlaneGraph::build(int vertex_count, std::vector<std::vector<int>> faces,
                             bool check_three_connected) {
  PlaneGraph g;
  g.vertex_count_ = vertex_count;
  g.faces_ = std::move(faces);
  for (auto& walk : g.faces_) {
    TF_CHECK(walk.size() >= 3, ErrorKind::NonManifold, "face with fewer than 3 vertices");
    for (int v : walk)
      TF_CHECK(v >= 0 && v < vertex_count, ErrorKind::IndexOutOfRange,
               "face references vertex " + std::to_string(v));
    rotate_to_lowest(walk);
  }
  g.derive();
  if (check_three_connected) g.check_three_connectivity();
  return g;
}

void PlaneGraph::derive() {
  corner_face_.clear();
  corner_face_.reserve(faces_.size() * 4);

  // succ[v]: w -> u for each corner (u, v, w), i.e. u follows w in the CCW
  // rotation at v. A manifold vertex has a single cycle.
  std::vector<std::unordered_map<int, int>> succ(vertex_count_);

  for (int f = 0; f < face_count(); ++f) {
    const auto& walk = faces_[f];
    int m = static_cast<int>(walk.size());
    for (int i = 0; i < m; ++i) {
      int u = walk[i];
      int v = walk[(i + 1) % m];
      int w = walk[(i + 2) % m];
      TF_CHECK(u != v, ErrorKind::NonManifold, "loop edge on face " + std::to_string(f));
      auto [it, inserted] = corner_face_.emplace(dir_key(u, v), f);
      TF_CHECK(inserted, ErrorKind::NonManifold,
               "directed edge " + std::to_string(u) + "->" + std::to_string(v) +
                   " appears in more than one face");
      auto [it2, ins2] = succ[v].emplace(w, u);
      TF_CHECK(ins2, ErrorKind::NonManifold,
               "vertex " + std::to_string(v) + " has a branched fan");
    }
  }

  // Every directed edge must have its reverse.
  for (const auto& [key, f] : corner_face_) {
    int u = static_cast<int>(key >> 32);
    int v = static_cast<int>(key & 0xffffffffu);
    TF_CHECK(corner_face_.count(dir_key(v, u)), ErrorKind::NonManifold,
             "edge " + std::to_string(u) + "-" + std::to_string(v) +
                 " used in only one direction");
  }
  TF_CHECK(corner_face_.size() % 2 == 0, ErrorKind::NonManifold, "odd directed edge count");
  edge_count_ = static_cast<int>(corner_face_.size() / 2);

  // Rebuild rotations by following each vertex's successor cycle; the cycle
  // must cover all neighbors (fan connectivity).
  rotation_.assign(vertex_count_, {});
  for (int v = 0; v < vertex_count_; ++v) {
    TF_CHECK(!succ[v].empty(), ErrorKind::NonManifold,
             "isolated vertex " + std::to_string(v));
    int start = succ[v].begin()->first;
    int cur = start;
    do {
      rotation_[v].push_back(cur);
      auto it = succ[v].find(cur);
      TF_CHECK(it != succ[v].end(), ErrorKind::NonManifold,
               "broken fan at vertex " + std::to_string(v));
      cur = it->second;
      TF_CHECK(rotation_[v].size() <= succ[v].size(), ErrorKind::NonManifold,
               "fan cycle defect at vertex " + std::to_string(v));
    } while (cur != start);
    TF_CHECK(rotation_[v].size() == succ[v].size(), ErrorKind::NonManifold,
             "disconnected fan at vertex " + std::to_string(v));
    // deterministic phase: start the cyclic list at the lowest neighbor
    rotate_to_lowest(rotation_[v]);
  }

  long long chi = static_cast<long long>(vertex_count_) - edge_count_ + face_count();
  TF_CHECK(chi == 2, ErrorKind::EulerViolation,
           "V-E+F = " + std::to_string(chi) + " (expected 2)");
}

void PlaneGraph::check_three_connectivity() const {
  TF_CHECK(vertex_count_ >= 4, ErrorKind::NotThreeConnected, "fewer than 4 vertices");
  // Exhaustive 2-vertex removal at desk scale.
  std::vector<int> comp(vertex_count_);
  std::vector<int> stack;
  for (int a = 0; a < vertex_count_; ++a) {
    for (int b = a; b < vertex_count_; ++b) {
      // b == a removes a single vertex (covers 1- and 2-cuts uniformly)
      std::fill(comp.begin(), comp.end(), 0);
      comp[a] = comp[b] = -1;
      int seed = -1;
      for (int v = 0; v < vertex_count_ && seed < 0; ++v)
        if (comp[v] == 0) seed = v;
      if (seed < 0) continue;
      stack.assign(1, seed);
      comp[seed] = 1;
      int seen = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : rotation_[v]) {
          if (comp[w] == 0) {
            comp[w] = 1;
            ++seen;
            stack.push_back(w);
          }
        }
      }
      int alive = vertex_count_ - (a == b ? 1 : 2);
      TF_CHECK(seen == alive, ErrorKind::NotThreeConnected,
               "removing {" + std::to_string(a) + "," + std::to_string(b) +
                   "} disconnects the graph");
    }
  }
}

bool PlaneGraph::has_edge(int u, int v) const {
  return corner_face_.count(dir_key(u, v)) > 0;
}

int PlaneGraph::face_with_corner(int u, int v) const {
  auto it = corner_face_.find(dir_key(u, v));
  return it == corner_face_.end() ? -1 : it->second;
}

int PlaneGraph::face_across(int f, int u, int v) const {
  int a = face_with_corner(u, v);
  int b = face_with_corner(v, u);
  if (a == f) return b;
  if (b == f) return a;
  fail(ErrorKind::EdgeNotOnFace, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                     " not on face " + std::to_string(f));
}

int PlaneGraph::index_on_face(int f, int v) const {
  const auto& walk = faces_.at(f);
  for (int i = 0; i < static_cast<int>(walk.size()); ++i)
    if (walk[i] == v) return i;
  return -1;
}

int PlaneGraph::third_vertex(int f, int u, int v) const {
  TF_CHECK(is_triangle(f), ErrorKind::Internal, "third_vertex on non-triangle");
  for (int w : faces_.at(f))
    if (w != u && w != v) return w;
  fail(ErrorKind::Internal, "degenerate triangle " + std::to_string(f));
}

std::vector<int> PlaneGraph::faces_around_vertex(int v) const {
  std::vector<int> out;
  out.reserve(degree(v));
  for (int n : rotation_.at(v)) {
    int f = face_with_corner(v, n);
    TF_CHECK(f >= 0, ErrorKind::Internal, "missing corner face");
    out.push_back(f);
  }
  return out;
}

std::uint64_t PlaneGraph::content_hash() const {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(vertex_count_));
  for (const auto& walk : faces_) {
    mix(0xabcdefull);
    for (int v : walk) mix(static_cast<std::uint64_t>(v) + 1);
  }
  return h;
}

bool PlaneGraph::same_labeled_graph(const PlaneGraph& other) const {
  return vertex_count_ == other.vertex_count_ && faces_ == other.faces_;
}

bool is_tight(const PlaneGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    int big = 0;
    for (int f : g.faces_around_vertex(v))
      if (!g.is_triangle(f)) ++big;
    if (big > 1) return false;
  }
  return true;
}

bool is_triangulation(const PlaneGraph& g) {
  for (int f = 0; f < g.face_count(); ++f)
    if (!g.is_triangle(f)) return false;
  return true;
}

}  // namespace tightfold
