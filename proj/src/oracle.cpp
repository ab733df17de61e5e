#include "tightfold/oracle.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace tightfold {

namespace {

std::string tour_key(const VertexFaceTour& t) {
  std::string s;
  s.reserve(t.arcs.size() * 4 + t.partner.size() * 2);
  for (const auto& a : t.arcs) {
    s += static_cast<char>(a[0]);
    s += static_cast<char>(a[1]);
  }
  for (int p : t.partner) s += static_cast<char>(p);
  return s;
}

void guard(const PlaneGraph& g) {
  int sumdeg = 2 * g.edge_count();
  if (g.face_count() > kOracleMaxFaces || sumdeg > kOracleMaxDegreeSum)
    fail(ErrorKind::InstanceTooLarge,
         "F=" + std::to_string(g.face_count()) + " sum(deg)=" + std::to_string(sumdeg));
}

// All perfect matchings of `items`, first element matched to each other in
// turn (canonical order).
void all_matchings(std::vector<int>& items, std::vector<std::pair<int, int>>& cur,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
  if (items.empty()) {
    out.push_back(cur);
    return;
  }
  int first = items[0];
  for (size_t i = 1; i < items.size(); ++i) {
    std::vector<int> rest;
    rest.reserve(items.size() - 2);
    for (size_t j = 1; j < items.size(); ++j)
      if (j != i) rest.push_back(items[j]);
    cur.emplace_back(first, items[i]);
    all_matchings(rest, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool TourEnumeration::contains(const VertexFaceTour& t) const {
  VertexFaceTour n = normalized(t);
  return std::find(tours.begin(), tours.end(), n) != tours.end();
}

TourEnumeration enumerate_spanning_tours(const PlaneGraph& g) {
  guard(g);
  int F = g.face_count();
  int V = g.vertex_count();

  // arc candidates per face, lexicographic
  std::vector<std::vector<std::array<int, 2>>> cand(F);
  for (int f = 0; f < F; ++f) {
    std::vector<int> vs = g.face(f);
    std::sort(vs.begin(), vs.end());
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j)
        cand[f].push_back({vs[i], vs[j]});
  }
  // last face (by id) incident to each vertex, for parity pruning
  std::vector<int> last_face(V, -1);
  for (int f = 0; f < F; ++f)
    for (int v : g.face(f)) last_face[v] = std::max(last_face[v], f);

  TourEnumeration en;
  en.graph_hash = g.content_hash();

  std::vector<std::array<int, 2>> arcs(F, {-1, -1});
  std::vector<int> end_count(V, 0);

  // per-vertex matchings are combined by cartesian product
  std::function<void(int)> assign = [&](int f) {
    if (f == F) {
      // collect ends per vertex
      std::vector<std::vector<int>> at(V);
      for (int ff = 0; ff < F; ++ff) {
        at[arcs[ff][0]].push_back(2 * ff);
        at[arcs[ff][1]].push_back(2 * ff + 1);
      }
      std::vector<std::vector<std::vector<std::pair<int, int>>>> per_vertex;
      for (int v = 0; v < V; ++v) {
        if (at[v].empty()) continue;
        std::vector<std::vector<std::pair<int, int>>> ms;
        std::vector<std::pair<int, int>> cur;
        all_matchings(at[v], cur, ms);
        if (ms.empty()) return;
        per_vertex.push_back(std::move(ms));
      }
      // product
      std::vector<int> pick(per_vertex.size(), 0);
      while (true) {
        VertexFaceTour t;
        t.arcs = arcs;
        t.partner.assign(2 * F, -1);
        for (size_t i = 0; i < per_vertex.size(); ++i)
          for (auto [a, b] : per_vertex[i][pick[i]]) {
            t.partner[a] = b;
            t.partner[b] = a;
          }
        en.tours.push_back(std::move(t));
        size_t i = 0;
        for (; i < pick.size(); ++i) {
          if (++pick[i] < static_cast<int>(per_vertex[i].size())) break;
          pick[i] = 0;
        }
        if (i == pick.size()) break;
      }
      return;
    }
    for (const auto& pair : cand[f]) {
      arcs[f] = pair;
      ++end_count[pair[0]];
      ++end_count[pair[1]];
      bool ok = true;
      for (int v : g.face(f))
        if (last_face[v] == f && (end_count[v] % 2) != 0) ok = false;
      if (ok) assign(f + 1);
      --end_count[pair[0]];
      --end_count[pair[1]];
    }
  };
  assign(0);

  for (const auto& t : en.tours) {
    TF_CHECK(validate_spanning_tour(g, t).ok, ErrorKind::Internal,
             "oracle produced an invalid tour");
    en.component_counts.push_back(component_count(t));
    int cr = 0;
    for (int v = 0; v < V; ++v) cr += static_cast<int>(crossings_at(g, t, v).size());
    en.crossing_counts.push_back(cr);
  }
  return en;
}

HamiltonianWitness exists_hamiltonian_noncrossing(const PlaneGraph& g) {
  auto en = enumerate_spanning_tours(g);
  for (size_t i = 0; i < en.tours.size(); ++i)
    if (en.component_counts[i] == 1 && en.crossing_counts[i] == 0)
      return {true, en.tours[i]};
  return {};
}

ClosureReport closure_under_recombination(const PlaneGraph& g) {
  auto en = enumerate_spanning_tours(g);
  ClosureReport rep;
  rep.tour_count = static_cast<int>(en.tours.size());
  std::unordered_set<std::string> keys;
  keys.reserve(en.tours.size() * 2);
  for (const auto& t : en.tours) keys.insert(tour_key(t));

  // adjacent triangle pairs
  std::vector<std::pair<int, int>> pairs;
  for (int f = 0; f < g.face_count(); ++f) {
    const auto& walk = g.face(f);
    int m = static_cast<int>(walk.size());
    for (int i = 0; i < m; ++i) {
      int f2 = g.face_across(f, walk[i], walk[(i + 1) % m]);
      if (f2 > f && g.is_triangle(f) && g.is_triangle(f2)) pairs.emplace_back(f, f2);
    }
  }
  for (const auto& t : en.tours) {
    for (auto [f, f2] : pairs) {
      for (int op = 0; op < 2; ++op) {
        VertexFaceTour r;
        try {
          r = op == 0 ? switch_at(g, t, f, f2) : reflect_at(g, t, f, f2);
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::PatternMismatch) continue;
          throw;
        }
        ++rep.ops_checked;
        if (!validate_spanning_tour(g, r).ok || !keys.count(tour_key(normalized(r)))) {
          rep.closed = false;
          rep.message = "operation escaped the enumeration at faces " +
                        std::to_string(f) + "," + std::to_string(f2);
          return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace tightfold
