#include "tightfold/shapes.hpp"

#include <algorithm>
#include <cmath>

namespace tightfold {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec3 centroid_of(const std::vector<Vec3>& pts) {
  Vec3 c{0, 0, 0};
  for (const auto& p : pts) c = c + p;
  return c * (1.0 / static_cast<double>(pts.size()));
}

// Flip walks so every face is counterclockwise as seen from outside.
// Valid for convex shapes (body centroid is interior).
std::vector<std::vector<int>> orient_outward(const std::vector<Vec3>& pts,
                                             std::vector<std::vector<int>> faces) {
  Vec3 body = centroid_of(pts);
  for (auto& walk : faces) {
    std::vector<Vec3> fp;
    for (int v : walk) fp.push_back(pts[v]);
    Vec3 n = newell_normal(fp);
    if (n.dot(centroid_of(fp) - body) < 0) std::reverse(walk.begin(), walk.end());
  }
  return faces;
}

Polyhedron from_points_and_faces(std::vector<Vec3> pts,
                                 std::vector<std::vector<int>> faces) {
  faces = orient_outward(pts, faces);
  PlaneGraph g = PlaneGraph::from_faces(static_cast<int>(pts.size()), std::move(faces));
  return Polyhedron::build(std::move(g), std::move(pts));
}

// Face fishing for small convex point sets: every supporting plane becomes a
// face, coplanar vertices merged into one polygon.
std::vector<std::vector<int>> hull_faces(const std::vector<Vec3>& pts) {
  int n = static_cast<int>(pts.size());
  double scale = 0;
  for (const auto& p : pts) scale = std::max(scale, p.norm());
  double eps = 1e-9 * scale;

  struct Plane {
    Vec3 n;  // outward unit
    double d;
  };
  std::vector<Plane> planes;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec3 nn = (pts[j] - pts[i]).cross(pts[k] - pts[i]);
        if (nn.norm() < eps * scale) continue;
        nn = nn.normalized();
        double d = nn.dot(pts[i]);
        int pos = 0, neg = 0;
        for (int m = 0; m < n; ++m) {
          double s = nn.dot(pts[m]) - d;
          if (s > eps) ++pos;
          if (s < -eps) ++neg;
        }
        if (pos > 0 && neg > 0) continue;  // not supporting
        if (pos > 0) {                     // flip outward
          nn = nn * -1.0;
          d = -d;
        }
        bool known = false;
        for (const auto& pl : planes)
          if (pl.n.dot(nn) > 1.0 - 1e-9 && std::abs(pl.d - d) < 10 * eps) {
            known = true;
            break;
          }
        if (!known) planes.push_back({nn, d});
      }

  std::vector<std::vector<int>> faces;
  for (const auto& pl : planes) {
    std::vector<int> on;
    for (int m = 0; m < n; ++m)
      if (std::abs(pl.n.dot(pts[m]) - pl.d) <= 10 * eps) on.push_back(m);
    // order around the in-plane centroid, counterclockwise w.r.t. outward n
    std::vector<Vec3> fp;
    for (int v : on) fp.push_back(pts[v]);
    Vec3 c = centroid_of(fp);
    Vec3 ref = (fp[0] - c).normalized();
    Vec3 e2 = pl.n.cross(ref);
    std::sort(on.begin(), on.end(), [&](int a, int b) {
      Vec3 da = pts[a] - c, db = pts[b] - c;
      double aa = std::atan2(da.dot(e2), da.dot(ref));
      double ab = std::atan2(db.dot(e2), db.dot(ref));
      return aa < ab;
    });
    faces.push_back(on);
  }
  // canonical ids: sort normalized walks
  for (auto& w : faces) {
    auto it = std::min_element(w.begin(), w.end());
    std::rotate(w.begin(), it, w.end());
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

Polyhedron from_hull(std::vector<Vec3> pts) {
  auto faces = hull_faces(pts);
  return from_points_and_faces(std::move(pts), std::move(faces));
}

}  // namespace

Polyhedron make_tetrahedron() {
  std::vector<Vec3> pts = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  std::vector<std::vector<int>> faces = {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}};
  return from_points_and_faces(std::move(pts), std::move(faces));
}

Polyhedron make_octahedron() {
  std::vector<Vec3> pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  return from_hull(std::move(pts));
}

Polyhedron make_icosahedron() {
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> pts;
  for (double a : {-1.0, 1.0})
    for (double b : {-phi, phi}) {
      pts.push_back({0, a, b});
      pts.push_back({a, b, 0});
      pts.push_back({b, 0, a});
    }
  return from_hull(std::move(pts));
}

Polyhedron make_pyramid(int n) {
  TF_CHECK(n >= 3, ErrorKind::UnknownShape, "pyramid needs n >= 3");
  std::vector<Vec3> pts;
  for (int k = 0; k < n; ++k)
    pts.push_back({std::cos(2 * kPi * k / n), std::sin(2 * kPi * k / n), 0});
  pts.push_back({0, 0, 1});
  std::vector<std::vector<int>> faces;
  std::vector<int> base(n);
  for (int k = 0; k < n; ++k) base[k] = k;
  faces.push_back(base);
  for (int k = 0; k < n; ++k) faces.push_back({k, (k + 1) % n, n});
  return from_points_and_faces(std::move(pts), std::move(faces));
}

Polyhedron make_antiprism(int n) {
  TF_CHECK(n >= 3, ErrorKind::UnknownShape, "antiprism needs n >= 3");
  // uniform: lateral edges equal the polygon side
  double h = std::sqrt((std::cos(kPi / n) - std::cos(2 * kPi / n)) / 2.0);
  std::vector<Vec3> pts;
  for (int k = 0; k < n; ++k)
    pts.push_back({std::cos(2 * kPi * k / n), std::sin(2 * kPi * k / n), h});
  for (int k = 0; k < n; ++k)
    pts.push_back(
        {std::cos((2 * k + 1) * kPi / n), std::sin((2 * k + 1) * kPi / n), -h});
  std::vector<std::vector<int>> faces;
  std::vector<int> top(n), bottom(n);
  for (int k = 0; k < n; ++k) top[k] = k;
  for (int k = 0; k < n; ++k) bottom[k] = n + k;
  faces.push_back(top);
  faces.push_back(bottom);
  for (int k = 0; k < n; ++k) faces.push_back({k, n + k, (k + 1) % n});
  for (int k = 0; k < n; ++k) faces.push_back({n + k, n + (k + 1) % n, (k + 1) % n});
  return from_points_and_faces(std::move(pts), std::move(faces));
}

Polyhedron make_snub_cube() {
  // tribonacci constant
  double t = 1.0;
  for (int i = 0; i < 200; ++i) t = std::cbrt(t * t + t + 1.0);
  double base[3] = {1.0, 1.0 / t, t};
  int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  std::vector<Vec3> pts;
  for (int p = 0; p < 6; ++p) {
    bool even_perm = p < 3;
    for (int s = 0; s < 8; ++s) {
      int minus = ((s >> 0) & 1) + ((s >> 1) & 1) + ((s >> 2) & 1);
      bool even_minus = (minus % 2) == 0;
      if (even_perm != even_minus) continue;
      double v[3];
      for (int i = 0; i < 3; ++i)
        v[i] = ((s >> i) & 1) ? -base[perms[p][i]] : base[perms[p][i]];
      pts.push_back({v[0], v[1], v[2]});
    }
  }
  return from_hull(std::move(pts));
}

Polyhedron make_truncated_cube() {
  double xi = std::sqrt(2.0) - 1.0;
  double base[3] = {xi, 1.0, 1.0};
  std::vector<Vec3> pts;
  int perms[3][3] = {{0, 1, 2}, {1, 0, 2}, {1, 2, 0}};  // xi in each slot
  for (auto& pm : perms)
    for (int s = 0; s < 8; ++s) {
      double v[3];
      for (int i = 0; i < 3; ++i) v[i] = ((s >> i) & 1) ? -base[pm[i]] : base[pm[i]];
      pts.push_back({v[0], v[1], v[2]});
    }
  return from_hull(std::move(pts));
}

Polyhedron make_standard(int n) {
  TF_CHECK(n >= 4, ErrorKind::UnknownShape, "standard triangulation needs n >= 4");
  std::vector<Vec3> pts;
  pts.push_back({0, 0, 1});   // pole a = 0
  pts.push_back({0, 0, -1});  // pole b = 1
  int path = n - 2;
  for (int i = 0; i < path; ++i) {
    double th = -kPi / 3 + (path == 1 ? 0.0 : (2 * kPi / 3) * i / (path - 1));
    pts.push_back({std::cos(th), std::sin(th), 0});
  }
  auto p = [](int i) { return i + 1; };  // p_1 = vertex 2
  std::vector<std::vector<int>> faces;
  for (int i = 1; i <= n - 3; ++i) faces.push_back({0, p(i), p(i + 1)});
  for (int i = 1; i <= n - 3; ++i) faces.push_back({1, p(i), p(i + 1)});
  faces.push_back({0, 1, p(1)});
  faces.push_back({0, 1, p(n - 2)});
  return from_points_and_faces(std::move(pts), std::move(faces));
}

Polyhedron builtin_shape(const std::string& name) {
  auto colon = name.find(':');
  std::string head = name.substr(0, colon);
  int arg = -1;
  if (colon != std::string::npos) {
    try {
      size_t used = 0;
      arg = std::stoi(name.substr(colon + 1), &used);
      if (used != name.size() - colon - 1) arg = -1;
    } catch (...) {
      arg = -1;
    }
    if (arg < 0) fail(ErrorKind::UnknownShape, "bad shape parameter in '" + name + "'");
  }
  if (head == "tetrahedron" && colon == std::string::npos) return make_tetrahedron();
  if (head == "octahedron" && colon == std::string::npos) return make_octahedron();
  if (head == "icosahedron" && colon == std::string::npos) return make_icosahedron();
  if (head == "snub-cube" && colon == std::string::npos) return make_snub_cube();
  if (head == "truncated-cube" && colon == std::string::npos) return make_truncated_cube();
  if (head == "pyramid" && arg >= 3) return make_pyramid(arg);
  if (head == "antiprism" && arg >= 3) return make_antiprism(arg);
  if (head == "standard" && arg >= 4) return make_standard(arg);
  fail(ErrorKind::UnknownShape, "unknown shape '" + name + "'");
}

}  // namespace tightfold
