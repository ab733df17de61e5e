#include "tightfold/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace tightfold {

// ---------------------------------------------------------------------------
// Plane fitting (least squares via Jacobi eigendecomposition of the 3x3
// covariance matrix; smallest eigenvector is the normal).

namespace {

void jacobi3(double a[3][3], double eigval[3], double eigvec[3][3]) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) eigvec[i][j] = (i == j) ? 1.0 : 0.0;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
    if (off == 0.0) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (a[p][q] == 0.0) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        double app = a[p][p], aqq = a[q][q], apq = a[p][q];
        a[p][p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
        a[q][q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
        a[p][q] = a[q][p] = 0.0;
        int r = 3 - p - q;
        double arp = a[r][p], arq = a[r][q];
        a[r][p] = a[p][r] = c * arp - s * arq;
        a[r][q] = a[q][r] = s * arp + c * arq;
        for (int i = 0; i < 3; ++i) {
          double vip = eigvec[i][p], viq = eigvec[i][q];
          eigvec[i][p] = c * vip - s * viq;
          eigvec[i][q] = s * vip + c * viq;
        }
      }
    }
  }
  for (int i = 0; i < 3; ++i) eigval[i] = a[i][i];
}

}  // namespace

FitPlane fit_plane(const std::vector<Vec3>& pts) {
  Vec3 c{0, 0, 0};
  for (const auto& p : pts) c = c + p;
  c = c * (1.0 / static_cast<double>(pts.size()));
  double cov[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  for (const auto& p : pts) {
    Vec3 d = p - c;
    double v[3] = {d.x, d.y, d.z};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) cov[i][j] += v[i] * v[j];
  }
  double eigval[3], eigvec[3][3];
  jacobi3(cov, eigval, eigvec);
  int k = 0;
  if (eigval[1] < eigval[k]) k = 1;
  if (eigval[2] < eigval[k]) k = 2;
  Vec3 n{eigvec[0][k], eigvec[1][k], eigvec[2][k]};
  return FitPlane{c, n.normalized()};
}

double plane_residual(const FitPlane& pl, const std::vector<Vec3>& pts) {
  double r = 0;
  for (const auto& p : pts) r = std::max(r, std::abs((p - pl.centroid).dot(pl.normal)));
  return r;
}

Vec3 newell_normal(const std::vector<Vec3>& walk) {
  Vec3 n{0, 0, 0};
  size_t m = walk.size();
  for (size_t i = 0; i < m; ++i) {
    const Vec3& a = walk[i];
    const Vec3& b = walk[(i + 1) % m];
    n.x += (a.y - b.y) * (a.z + b.z);
    n.y += (a.z - b.z) * (a.x + b.x);
    n.z += (a.x - b.x) * (a.y + b.y);
  }
  return n * 0.5;
}

double signed_area(const std::vector<Vec2>& poly) {
  double s = 0;
  size_t m = poly.size();
  for (size_t i = 0; i < m; ++i) s += poly[i].cross(poly[(i + 1) % m]);
  return 0.5 * s;
}

// ---------------------------------------------------------------------------
// Exact orientation predicate (Shewchuk's adaptive orient2d).

namespace {

constexpr double kEps = 1.1102230246251565e-16;  // 2^-53
constexpr double kSplitter = 134217729.0;        // 2^27 + 1
constexpr double kResultErrBound = (3.0 + 8.0 * kEps) * kEps;
constexpr double kCcwErrBoundA = (3.0 + 16.0 * kEps) * kEps;
constexpr double kCcwErrBoundB = (2.0 + 12.0 * kEps) * kEps;
constexpr double kCcwErrBoundC = (9.0 + 64.0 * kEps) * kEps * kEps;

inline void fast_two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  double bvirt = x - a;
  y = b - bvirt;
}

inline void two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  double bvirt = x - a;
  double avirt = x - bvirt;
  double bround = b - bvirt;
  double around = a - avirt;
  y = around + bround;
}

inline void two_diff(double a, double b, double& x, double& y) {
  x = a - b;
  double bvirt = a - x;
  double avirt = x + bvirt;
  double bround = bvirt - b;
  double around = a - avirt;
  y = around + bround;
}

inline double two_diff_tail(double a, double b, double x) {
  double bvirt = a - x;
  double avirt = x + bvirt;
  double bround = bvirt - b;
  double around = a - avirt;
  return around + bround;
}

inline void split(double a, double& hi, double& lo) {
  double c = kSplitter * a;
  double abig = c - a;
  hi = c - abig;
  lo = a - hi;
}

inline void two_product(double a, double b, double& x, double& y) {
  x = a * b;
  double ahi, alo, bhi, blo;
  split(a, ahi, alo);
  split(b, bhi, blo);
  double err1 = x - (ahi * bhi);
  double err2 = err1 - (alo * bhi);
  double err3 = err2 - (ahi * blo);
  y = (alo * blo) - err3;
}

inline void two_one_diff(double a1, double a0, double b, double& x2, double& x1,
                         double& x0) {
  double i;
  two_diff(a0, b, i, x0);
  two_sum(a1, i, x2, x1);
}

inline void two_two_diff(double a1, double a0, double b1, double b0, double& x3,
                         double& x2, double& x1, double& x0) {
  double j, r0;
  two_one_diff(a1, a0, b0, j, r0, x0);
  two_one_diff(j, r0, b1, x3, x2, x1);
}

inline double estimate(int elen, const double* e) {
  double q = e[0];
  for (int i = 1; i < elen; ++i) q += e[i];
  return q;
}

int fast_expansion_sum_zeroelim(int elen, const double* e, int flen, const double* f,
                                double* h) {
  double q, qnew, hh, enow, fnow;
  int eindex = 0, findex = 0, hindex = 0;
  enow = e[0];
  fnow = f[0];
  if ((fnow > enow) == (fnow > -enow)) {
    q = enow;
    ++eindex;
    enow = eindex < elen ? e[eindex] : 0.0;
  } else {
    q = fnow;
    ++findex;
    fnow = findex < flen ? f[findex] : 0.0;
  }
  if ((eindex < elen) && (findex < flen)) {
    if ((fnow > enow) == (fnow > -enow)) {
      fast_two_sum(enow, q, qnew, hh);
      ++eindex;
      enow = eindex < elen ? e[eindex] : 0.0;
    } else {
      fast_two_sum(fnow, q, qnew, hh);
      ++findex;
      fnow = findex < flen ? f[findex] : 0.0;
    }
    q = qnew;
    if (hh != 0.0) h[hindex++] = hh;
    while ((eindex < elen) && (findex < flen)) {
      if ((fnow > enow) == (fnow > -enow)) {
        two_sum(q, enow, qnew, hh);
        ++eindex;
        enow = eindex < elen ? e[eindex] : 0.0;
      } else {
        two_sum(q, fnow, qnew, hh);
        ++findex;
        fnow = findex < flen ? f[findex] : 0.0;
      }
      q = qnew;
      if (hh != 0.0) h[hindex++] = hh;
    }
  }
  while (eindex < elen) {
    two_sum(q, enow, qnew, hh);
    ++eindex;
    enow = eindex < elen ? e[eindex] : 0.0;
    q = qnew;
    if (hh != 0.0) h[hindex++] = hh;
  }
  while (findex < flen) {
    two_sum(q, fnow, qnew, hh);
    ++findex;
    fnow = findex < flen ? f[findex] : 0.0;
    q = qnew;
    if (hh != 0.0) h[hindex++] = hh;
  }
  if ((q != 0.0) || (hindex == 0)) h[hindex++] = q;
  return hindex;
}

double orient2d_adapt(Vec2 pa, Vec2 pb, Vec2 pc, double detsum) {
  double acx = pa.x - pc.x;
  double bcx = pb.x - pc.x;
  double acy = pa.y - pc.y;
  double bcy = pb.y - pc.y;

  double detleft, detlefttail, detright, detrighttail;
  two_product(acx, bcy, detleft, detlefttail);
  two_product(acy, bcx, detright, detrighttail);

  double b[4];
  two_two_diff(detleft, detlefttail, detright, detrighttail, b[3], b[2], b[1], b[0]);

  double det = estimate(4, b);
  double errbound = kCcwErrBoundB * detsum;
  if ((det >= errbound) || (-det >= errbound)) return det;

  double acxtail = two_diff_tail(pa.x, pc.x, acx);
  double bcxtail = two_diff_tail(pb.x, pc.x, bcx);
  double acytail = two_diff_tail(pa.y, pc.y, acy);
  double bcytail = two_diff_tail(pb.y, pc.y, bcy);
  if ((acxtail == 0.0) && (acytail == 0.0) && (bcxtail == 0.0) && (bcytail == 0.0))
    return det;

  errbound = kCcwErrBoundC * detsum + kResultErrBound * std::abs(det);
  det += (acx * bcytail + bcy * acxtail) - (acy * bcxtail + bcx * acytail);
  if ((det >= errbound) || (-det >= errbound)) return det;

  double s1, s0, t1, t0, u[4];
  double c1[8], c2[12], d[16];

  two_product(acxtail, bcy, s1, s0);
  two_product(acytail, bcx, t1, t0);
  two_two_diff(s1, s0, t1, t0, u[3], u[2], u[1], u[0]);
  int c1len = fast_expansion_sum_zeroelim(4, b, 4, u, c1);

  two_product(acx, bcytail, s1, s0);
  two_product(acy, bcxtail, t1, t0);
  two_two_diff(s1, s0, t1, t0, u[3], u[2], u[1], u[0]);
  int c2len = fast_expansion_sum_zeroelim(c1len, c1, 4, u, c2);

  two_product(acxtail, bcytail, s1, s0);
  two_product(acytail, bcxtail, t1, t0);
  two_two_diff(s1, s0, t1, t0, u[3], u[2], u[1], u[0]);
  int dlen = fast_expansion_sum_zeroelim(c2len, c2, 4, u, d);

  return d[dlen - 1];
}

}  // namespace

double orient2d(Vec2 pa, Vec2 pb, Vec2 pc) {
  double detleft = (pa.x - pc.x) * (pb.y - pc.y);
  double detright = (pa.y - pc.y) * (pb.x - pc.x);
  double det = detleft - detright;
  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return det;
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return det;
    detsum = -detleft - detright;
  } else {
    return det;
  }
  double errbound = kCcwErrBoundA * detsum;
  if ((det >= errbound) || (-det >= errbound)) return det;
  return orient2d_adapt(pa, pb, pc, detsum);
}

// ---------------------------------------------------------------------------
// Polygon predicates built on orient2d.

bool segments_cross_properly(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  int d1 = orient2d_sign(c, d, a);
  int d2 = orient2d_sign(c, d, b);
  int d3 = orient2d_sign(a, b, c);
  int d4 = orient2d_sign(a, b, d);
  return d1 * d2 < 0 && d3 * d4 < 0;
}

namespace {

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
  if (orient2d_sign(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool point_strictly_inside(const std::vector<Vec2>& poly, Vec2 p) {
  size_t m = poly.size();
  for (size_t i = 0; i < m; ++i)
    if (on_segment(poly[i], poly[(i + 1) % m], p)) return false;
  // winding number by signed crossings of the upward ray
  int wn = 0;
  for (size_t i = 0; i < m; ++i) {
    Vec2 a = poly[i], b = poly[(i + 1) % m];
    if (a.y <= p.y) {
      if (b.y > p.y && orient2d_sign(a, b, p) > 0) ++wn;
    } else {
      if (b.y <= p.y && orient2d_sign(a, b, p) < 0) --wn;
    }
  }
  return wn != 0;
}

bool interiors_intersect(const std::vector<Vec2>& p, const std::vector<Vec2>& q) {
  size_t np = p.size(), nq = q.size();
  for (size_t i = 0; i < np; ++i)
    for (size_t j = 0; j < nq; ++j)
      if (segments_cross_properly(p[i], p[(i + 1) % np], q[j], q[(j + 1) % nq]))
        return true;
  for (const auto& v : p)
    if (point_strictly_inside(q, v)) return true;
  for (const auto& v : q)
    if (point_strictly_inside(p, v)) return true;
  // Catches coincident polygons whose vertices all lie on each other's boundary.
  for (size_t i = 0; i < np; ++i) {
    Vec2 mid = (p[i] + p[(i + 1) % np]) * 0.5;
    if (point_strictly_inside(q, mid)) return true;
  }
  for (size_t j = 0; j < nq; ++j) {
    Vec2 mid = (q[j] + q[(j + 1) % nq]) * 0.5;
    if (point_strictly_inside(p, mid)) return true;
  }
  return false;
}

}  // namespace tightfold
