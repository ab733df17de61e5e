#pragma once

#include <array>
#include <cmath>
#include <vector>

namespace tightfold {

struct Vec2 {
  double x = 0, y = 0;
  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}
  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::sqrt(x * x + y * y); }
};

struct Vec3 {
  double x = 0, y = 0, z = 0;
  Vec3() = default;
  Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}
  Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(Vec3 o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const {
    double n = norm();
    return n > 0 ? Vec3{x / n, y / n, z / n} : Vec3{0, 0, 0};
  }
};

inline double dist(Vec2 a, Vec2 b) { return (a - b).norm(); }
inline double dist(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

// Least-squares plane through a point set: centroid + unit normal (sign
// unspecified) via the smallest eigenvector of the covariance matrix.
struct FitPlane {
  Vec3 centroid;
  Vec3 normal;
};
FitPlane fit_plane(const std::vector<Vec3>& pts);

// Max |(p - centroid) . normal| over the points.
double plane_residual(const FitPlane& pl, const std::vector<Vec3>& pts);

// Area-weighted (Newell) normal of a closed 3D polygon walk; the sign follows
// the walk orientation (right-hand rule). Not normalized.
Vec3 newell_normal(const std::vector<Vec3>& walk);

// Signed area of a 2D polygon (positive for counterclockwise).
double signed_area(const std::vector<Vec2>& poly);

// Exact sign of the 2D orientation determinant (Shewchuk's adaptive
// predicate): > 0 if a,b,c counterclockwise, < 0 clockwise, 0 collinear.
double orient2d(Vec2 a, Vec2 b, Vec2 c);
inline int orient2d_sign(Vec2 a, Vec2 b, Vec2 c) {
  double d = orient2d(a, b, c);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

// Proper crossing of open segments ab and cd (shared endpoints and
// collinear touching do not count).
bool segments_cross_properly(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

// Point strictly inside a simple polygon (boundary points excluded).
bool point_strictly_inside(const std::vector<Vec2>& poly, Vec2 p);

// Open-interior intersection test for two simple polygons; touching along
// boundaries is not an intersection.
bool interiors_intersect(const std::vector<Vec2>& p, const std::vector<Vec2>& q);

}  // namespace tightfold
