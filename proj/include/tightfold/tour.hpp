#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tightfold/plane_graph.hpp"

namespace tightfold {

// Spanning vertex-face tour: one arc per face (two distinct end vertices,
// both incident to the face) plus a perfect matching of arc-ends at every
// vertex. Arc k of face f has the end handle 2f+k; following
// arc -> matched end -> arc decomposes the structure into closed components.
struct VertexFaceTour {
  std::vector<std::array<int, 2>> arcs;  // arcs[f] = {end0, end1}; -1 = unset
  std::vector<int> partner;              // partner[h] for h = 2f+k; -1 = unmatched

  int face_count() const { return static_cast<int>(arcs.size()); }
  int end_vertex(int h) const { return arcs[h >> 1][h & 1]; }
  static int face_of(int h) { return h >> 1; }
  static int mate(int h) { return h ^ 1; }  // other end of the same arc

  // Handle of face f's end located at v; -1 if none.
  int end_at(int f, int v) const {
    if (arcs[f][0] == v) return 2 * f;
    if (arcs[f][1] == v) return 2 * f + 1;
    return -1;
  }
  bool has_arc(int f, int a, int b) const {
    return (arcs[f][0] == a && arcs[f][1] == b) || (arcs[f][0] == b && arcs[f][1] == a);
  }

  bool operator==(const VertexFaceTour&) const = default;
};

struct TourReport {
  bool ok = true;
  std::string message;
};

// Checks every Arc and pairing invariant against g; reports the first
// violation instead of throwing.
TourReport validate_spanning_tour(const PlaneGraph& g, const VertexFaceTour& t);

// One component as the alternating sequence (v1, f1, v2, f2, ..., vk, fk);
// face f_i lies between v_i and v_{i+1} (indices mod k).
using TourComponent = std::vector<std::pair<int, int>>;

std::vector<TourComponent> components(const VertexFaceTour& t);
int component_count(const VertexFaceTour& t);

// Rotate/orient a component to its canonical form: starts at the lowest face
// id, in the direction with the smaller leading vertex.
TourComponent canonical_component(const TourComponent& c);

// Build a tour from explicit component sequences; validates the result.
VertexFaceTour tour_from_components(const PlaneGraph& g,
                                    const std::vector<TourComponent>& comps);

// Side-normalized copy (each arc stored with ends ascending); two tours are
// the same structure iff their normalized forms compare equal.
VertexFaceTour normalized(const VertexFaceTour& t);

// Debug text: one canonical component per line, "(v1 f1 v2 f2 ... v1)".
std::string tour_debug_text(const VertexFaceTour& t);

// The switching operation on adjacent triangles f = uvx, f' = uvy:
// (u,f,x),(v,f',y) -> (v,f,x),(u,f',y). Throws PatternMismatch when the
// required arcs are absent.
VertexFaceTour switch_at(const PlaneGraph& g, const VertexFaceTour& t, int f, int f2);

// The reflecting operation: (u,f,x),(u,f',y) -> (v,f,x),(v,f',y).
VertexFaceTour reflect_at(const PlaneGraph& g, const VertexFaceTour& t, int f, int f2);

struct ArcReplace {
  int face;
  std::array<int, 2> new_ends;  // side-wise replacement of arcs[face]
};
struct PairRewire {
  int h1, h2;  // end handles to match together
};

// Atomic batch edit: arc replacements, explicit rewires, then the local
// re-pairing rule for ends left dangling (exactly two per vertex). The result
// must validate; otherwise InvalidRecombination is thrown and the input is
// left untouched.
VertexFaceTour recombine(const PlaneGraph& g, const VertexFaceTour& t,
                         const std::vector<ArcReplace>& replaces,
                         const std::vector<PairRewire>& rewires = {});

// A pass at v is a matched pair of arc-ends there, identified by its two host
// faces. Two passes cross iff their faces interleave in the cyclic fan at v.
using Pass = std::pair<int, int>;
std::vector<std::pair<Pass, Pass>> crossings_at(const PlaneGraph& g,
                                                const VertexFaceTour& t, int v);
bool is_noncrossing(const PlaneGraph& g, const VertexFaceTour& t);

namespace detail {

// In-place primitives used by the lemma drivers. Both preserve the pairing
// structure; arc validity is the caller's concern.

// Swap the locations of two ends at different vertices; each takes over the
// other's matching slot.
void exchange_ends(VertexFaceTour& t, int h1, int h2);

// Move two ends co-located at one vertex to `target`; they pair up there and
// their former partners pair up behind them.
void comove_ends(VertexFaceTour& t, int h1, int h2, int target);

}  // namespace detail

}  // namespace tightfold
