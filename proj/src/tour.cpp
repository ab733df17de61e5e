#include "tightfold/tour.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tightfold {

TourReport validate_spanning_tour(const PlaneGraph& g, const VertexFaceTour& t) {
  auto bad = [](std::string m) { return TourReport{false, std::move(m)}; };
  if (t.face_count() != g.face_count())
    return bad("tour has " + std::to_string(t.face_count()) + " arcs for " +
               std::to_string(g.face_count()) + " faces");
  if (t.partner.size() != 2 * t.arcs.size()) return bad("pairing table size mismatch");
  for (int f = 0; f < t.face_count(); ++f) {
    auto [a, b] = t.arcs[f];
    if (a < 0 || b < 0) return bad("face " + std::to_string(f) + " not covered");
    if (a == b) return bad("face " + std::to_string(f) + " has a degenerate arc");
    if (!g.face_contains(f, a) || !g.face_contains(f, b))
      return bad("face " + std::to_string(f) + " has a non-incident end");
  }
  for (int h = 0; h < 2 * t.face_count(); ++h) {
    int p = t.partner[h];
    if (p < 0 || p >= 2 * t.face_count())
      return bad("unmatched end at face " + std::to_string(h >> 1));
    if (p == h) return bad("end paired with itself at face " + std::to_string(h >> 1));
    if (t.partner[p] != h) return bad("pairing is not an involution");
    if (t.end_vertex(p) != t.end_vertex(h))
      return bad("ends paired across different vertices");
  }
  return {};
}

std::vector<TourComponent> components(const VertexFaceTour& t) {
  std::vector<TourComponent> out;
  std::vector<char> seen(2 * t.arcs.size(), 0);
  for (int h0 = 0; h0 < 2 * t.face_count(); ++h0) {
    if (seen[h0]) continue;
    TourComponent comp;
    int h = h0;
    do {
      seen[h] = seen[VertexFaceTour::mate(h)] = 1;
      comp.emplace_back(t.end_vertex(h), VertexFaceTour::face_of(h));
      h = t.partner[VertexFaceTour::mate(h)];
    } while (h != h0);
    out.push_back(std::move(comp));
  }
  return out;
}

int component_count(const VertexFaceTour& t) {
  return static_cast<int>(components(t).size());
}

TourComponent canonical_component(const TourComponent& c) {
  int k = static_cast<int>(c.size());
  int best = 0;
  for (int i = 1; i < k; ++i)
    if (c[i].second < c[best].second) best = i;
  // forward: starts (v_best, f_best, v_best+1, ...)
  TourComponent fwd(k), rev(k);
  for (int i = 0; i < k; ++i) fwd[i] = c[(best + i) % k];
  // reversed direction anchored on the same face: (v_{best+1}, f_best, v_best, f_{best-1}, ...)
  for (int i = 0; i < k; ++i) {
    int vi = (best + 1 - i % k + 2 * k) % k;
    int fi = (best - i % k + 2 * k) % k;
    rev[i] = {c[vi].first, c[fi].second};
  }
  return fwd <= rev ? fwd : rev;
}

VertexFaceTour normalized(const VertexFaceTour& t) {
  VertexFaceTour out = t;
  for (int f = 0; f < out.face_count(); ++f) {
    if (out.arcs[f][0] <= out.arcs[f][1]) continue;
    std::swap(out.arcs[f][0], out.arcs[f][1]);
    int a = 2 * f, b = 2 * f + 1;
    int pa = out.partner[a], pb = out.partner[b];
    // repoint the partners of the swapped handles
    std::swap(out.partner[a], out.partner[b]);
    if (pa >= 0) out.partner[pa] = b;
    if (pb >= 0) out.partner[pb] = a;
  }
  return out;
}

VertexFaceTour tour_from_components(const PlaneGraph& g,
                                    const std::vector<TourComponent>& comps) {
  VertexFaceTour t;
  t.arcs.assign(g.face_count(), {-1, -1});
  t.partner.assign(2 * g.face_count(), -1);
  for (const auto& comp : comps) {
    int k = static_cast<int>(comp.size());
    for (int i = 0; i < k; ++i) {
      auto [v, f] = comp[i];
      int vnext = comp[(i + 1) % k].first;
      TF_CHECK(t.arcs[f][0] < 0, ErrorKind::InvalidRecombination,
               "face " + std::to_string(f) + " appears twice");
      t.arcs[f] = {v, vnext};
    }
    for (int i = 0; i < k; ++i) {
      int f = comp[i].second;
      int fnext = comp[(i + 1) % k].second;
      t.partner[2 * f + 1] = 2 * fnext;
      t.partner[2 * fnext] = 2 * f + 1;
    }
  }
  auto rep = validate_spanning_tour(g, t);
  TF_CHECK(rep.ok, ErrorKind::InvalidRecombination, rep.message);
  return t;
}

std::string tour_debug_text(const VertexFaceTour& t) {
  auto comps = components(t);
  std::vector<TourComponent> canon;
  canon.reserve(comps.size());
  for (const auto& c : comps) canon.push_back(canonical_component(c));
  std::sort(canon.begin(), canon.end(),
            [](const TourComponent& a, const TourComponent& b) {
              return a[0].second < b[0].second;
            });
  std::ostringstream os;
  for (const auto& c : canon) {
    os << '(';
    for (const auto& [v, f] : c) os << v << ' ' << f << ' ';
    os << c[0].first << ")\n";
  }
  return os.str();
}

namespace detail {

void exchange_ends(VertexFaceTour& t, int h1, int h2) {
  int v1 = t.end_vertex(h1), v2 = t.end_vertex(h2);
  TF_CHECK(v1 != v2, ErrorKind::Internal, "exchange_ends needs distinct vertices");
  int p1 = t.partner[h1], p2 = t.partner[h2];
  t.arcs[h1 >> 1][h1 & 1] = v2;
  t.arcs[h2 >> 1][h2 & 1] = v1;
  t.partner[h1] = p2;
  t.partner[p2] = h1;
  t.partner[h2] = p1;
  t.partner[p1] = h2;
}

void comove_ends(VertexFaceTour& t, int h1, int h2, int target) {
  int v = t.end_vertex(h1);
  TF_CHECK(v == t.end_vertex(h2), ErrorKind::Internal, "comove_ends needs co-located ends");
  TF_CHECK(target != v, ErrorKind::Internal, "comove_ends target equals source");
  int p1 = t.partner[h1], p2 = t.partner[h2];
  t.arcs[h1 >> 1][h1 & 1] = target;
  t.arcs[h2 >> 1][h2 & 1] = target;
  if (p1 == h2) return;  // mutually paired ends travel together
  t.partner[h1] = h2;
  t.partner[h2] = h1;
  t.partner[p1] = p2;
  t.partner[p2] = p1;
}

}  // namespace detail

namespace {

// Shared edge {u, v} of two adjacent faces; PatternMismatch if not adjacent.
std::pair<int, int> shared_edge(const PlaneGraph& g, int f, int f2) {
  const auto& walk = g.face(f);
  int m = static_cast<int>(walk.size());
  for (int i = 0; i < m; ++i) {
    int u = walk[i], v = walk[(i + 1) % m];
    if (g.face_with_corner(v, u) == f2) return {u, v};
  }
  fail(ErrorKind::PatternMismatch,
       "faces " + std::to_string(f) + " and " + std::to_string(f2) + " are not adjacent");
}

}  // namespace

VertexFaceTour switch_at(const PlaneGraph& g, const VertexFaceTour& t, int f, int f2) {
  TF_CHECK(g.is_triangle(f) && g.is_triangle(f2), ErrorKind::PatternMismatch,
           "switching requires two triangular faces");
  auto [u, v] = shared_edge(g, f, f2);
  int hu = t.end_at(f, u), hv = t.end_at(f, v);
  int ku = t.end_at(f2, u), kv = t.end_at(f2, v);
  // exactly one end of each arc on the shared edge, at opposite endpoints
  int h = -1, k = -1;
  if (hu >= 0 && hv < 0 && kv >= 0 && ku < 0) {
    h = hu;
    k = kv;
  } else if (hv >= 0 && hu < 0 && ku >= 0 && kv < 0) {
    h = hv;
    k = ku;
  }
  if (h < 0)
    fail(ErrorKind::PatternMismatch, "switching pattern absent at faces " +
                                         std::to_string(f) + "," + std::to_string(f2));
  VertexFaceTour out = t;
  detail::exchange_ends(out, h, k);
  return out;
}

VertexFaceTour reflect_at(const PlaneGraph& g, const VertexFaceTour& t, int f, int f2) {
  TF_CHECK(g.is_triangle(f) && g.is_triangle(f2), ErrorKind::PatternMismatch,
           "reflecting requires two triangular faces");
  auto [u, v] = shared_edge(g, f, f2);
  int hu = t.end_at(f, u), hv = t.end_at(f, v);
  int ku = t.end_at(f2, u), kv = t.end_at(f2, v);
  int h = -1, k = -1, target = -1;
  if (hu >= 0 && hv < 0 && ku >= 0 && kv < 0) {
    h = hu;
    k = ku;
    target = v;
  } else if (hv >= 0 && hu < 0 && kv >= 0 && ku < 0) {
    h = hv;
    k = kv;
    target = u;
  }
  // The strand must pass f -> shared vertex -> f'; this is what makes the
  // operation an involution.
  if (h < 0 || t.partner[h] != k)
    fail(ErrorKind::PatternMismatch, "reflecting pattern absent at faces " +
                                         std::to_string(f) + "," + std::to_string(f2));
  VertexFaceTour out = t;
  detail::comove_ends(out, h, k, target);
  return out;
}

VertexFaceTour recombine(const PlaneGraph& g, const VertexFaceTour& t,
                         const std::vector<ArcReplace>& replaces,
                         const std::vector<PairRewire>& rewires) {
  VertexFaceTour out = t;
  std::vector<char> replaced(out.face_count(), 0);
  for (const auto& r : replaces) {
    if (r.face < 0 || r.face >= out.face_count() || replaced[r.face])
      fail(ErrorKind::InvalidRecombination,
           "bad or duplicate arc replacement for face " + std::to_string(r.face));
    replaced[r.face] = 1;
    out.arcs[r.face] = r.new_ends;
  }
  // break pairs whose ends no longer share a vertex
  for (int h = 0; h < 2 * out.face_count(); ++h) {
    int p = out.partner[h];
    if (p > h && out.end_vertex(p) != out.end_vertex(h))
      out.partner[h] = out.partner[p] = -1;
  }
  for (const auto& rw : rewires) {
    if (rw.h1 == rw.h2 || rw.h1 < 0 || rw.h2 < 0 || rw.h1 >= 2 * out.face_count() ||
        rw.h2 >= 2 * out.face_count() ||
        out.end_vertex(rw.h1) != out.end_vertex(rw.h2))
      fail(ErrorKind::InvalidRecombination, "invalid pairing rewire");
    for (int h : {rw.h1, rw.h2}) {
      int p = out.partner[h];
      if (p >= 0) out.partner[p] = -1;
    }
    out.partner[rw.h1] = rw.h2;
    out.partner[rw.h2] = rw.h1;
  }
  // local rule: dangling ends must pair up two-per-vertex
  std::map<int, std::vector<int>> dangling;
  for (int h = 0; h < 2 * out.face_count(); ++h)
    if (out.partner[h] < 0) dangling[out.end_vertex(h)].push_back(h);
  for (auto& [v, hs] : dangling) {
    if (hs.size() != 2)
      fail(ErrorKind::InvalidRecombination,
           "recombination leaves " + std::to_string(hs.size()) +
               " unmatched ends at vertex " + std::to_string(v));
    out.partner[hs[0]] = hs[1];
    out.partner[hs[1]] = hs[0];
  }
  auto rep = validate_spanning_tour(g, out);
  if (!rep.ok) fail(ErrorKind::InvalidRecombination, rep.message);
  return out;
}

std::vector<std::pair<Pass, Pass>> crossings_at(const PlaneGraph& g,
                                                const VertexFaceTour& t, int v) {
  auto fan = g.faces_around_vertex(v);
  int d = static_cast<int>(fan.size());
  auto fan_pos = [&](int f) {
    for (int i = 0; i < d; ++i)
      if (fan[i] == f) return i;
    fail(ErrorKind::Internal, "face not in fan");
  };
  struct PassAt {
    int a, b;      // fan positions
    Pass faces;    // host faces, (lower fan position first)
  };
  std::vector<PassAt> passes;
  for (int h = 0; h < 2 * t.face_count(); ++h) {
    int p = t.partner[h];
    if (p <= h) continue;
    if (t.end_vertex(h) != v) continue;
    int fa = VertexFaceTour::face_of(h), fb = VertexFaceTour::face_of(p);
    int a = fan_pos(fa), b = fan_pos(fb);
    if (a > b) {
      std::swap(a, b);
      std::swap(fa, fb);
    }
    passes.push_back({a, b, {fa, fb}});
  }
  auto in_open_arc = [&](int x, int s, int e) {
    int len = ((e - s) % d + d) % d;
    int off = ((x - s) % d + d) % d;
    return off > 0 && off < len;
  };
  std::vector<std::pair<Pass, Pass>> out;
  for (size_t i = 0; i < passes.size(); ++i)
    for (size_t j = i + 1; j < passes.size(); ++j) {
      int c = (in_open_arc(passes[j].a, passes[i].a, passes[i].b) ? 1 : 0) +
              (in_open_arc(passes[j].b, passes[i].a, passes[i].b) ? 1 : 0);
      if (c == 1) out.push_back({passes[i].faces, passes[j].faces});
    }
  return out;
}

bool is_noncrossing(const PlaneGraph& g, const VertexFaceTour& t) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!crossings_at(g, t, v).empty()) return false;
  return true;
}

}  // namespace tightfold
