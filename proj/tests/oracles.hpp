#pragma once

// Reference computations that avoid the library's own code paths. Used to
// cross-check classifications and measurements in the tests.

#include <cmath>
#include <numbers>
#include <utility>

#include "minktrig/mink_core.hpp"

namespace oracle {

using minktrig::MVec3;
using minktrig::PlaneClass;

inline double mink(const MVec3& x, const MVec3& y) { return -x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3; }

/// Plane type from the determinant of the Gram matrix of the Minkowski form
/// restricted to span(u, v): positive -> definite (spacelike), negative ->
/// indefinite (timelike), zero -> degenerate (lightlike).
inline PlaneClass plane_by_gram(const MVec3& u, const MVec3& v) {
  const double g = mink(u, u) * mink(v, v) - mink(u, v) * mink(u, v);
  const double nu = u.x1 * u.x1 + u.x2 * u.x2 + u.x3 * u.x3;
  const double nv = v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3;
  if (std::abs(g) <= 1e-9 * nu * nv) return PlaneClass::Lightlike;
  return g > 0 ? PlaneClass::Spacelike : PlaneClass::Timelike;
}

/// Minkowski Gram-Schmidt: removes from v its component along the unit
/// non-null vector e.
inline MVec3 reject(const MVec3& v, const MVec3& e) {
  const double k = mink(v, e) / mink(e, e);
  return {v.x1 - k * e.x1, v.x2 - k * e.x2, v.x3 - k * e.x3};
}

inline MVec3 unit(const MVec3& v) {
  const double n = std::sqrt(std::abs(mink(v, v)));
  return {v.x1 / n, v.x2 / n, v.x3 / n};
}

/// Orthonormal frame of the tangent plane at a point p of the quadric,
/// built from the standard basis. For p on H2 both vectors are spacelike;
/// for p on S11 the first is timelike and the second spacelike.
inline std::pair<MVec3, MVec3> tangent_frame(const MVec3& p) {
  const bool hyperbolic = mink(p, p) < 0;
  if (hyperbolic) {
    MVec3 f1 = reject({0, 1, 0}, p);
    if (mink(f1, f1) < 1e-6) f1 = reject({0, 0, 1}, p);
    f1 = unit(f1);
    MVec3 f2 = unit(reject(reject({0, 0, 1}, p), f1));
    if (mink(f2, f2) < 1e-6) f2 = unit(reject(reject({0, 1, 0}, p), f1));
    return {f1, f2};
  }
  const MVec3 f1 = unit(reject({1, 0, 0}, p));
  MVec3 f2 = reject(reject({0, 1, 0}, p), f1);
  if (mink(f2, f2) < 1e-3) f2 = reject(reject({0, 0, 1}, p), f1);
  return {f1, unit(f2)};
}

/// Angle at a between the geodesics towards b and c, from the coordinates of
/// b and c in a tangent frame at a. In H2 this is a Euclidean angle between
/// two plane vectors; on S11 it is a difference of rapidities in the 1+1
/// dimensional tangent plane.
inline double angle_by_frame(const MVec3& b, const MVec3& a, const MVec3& c) {
  const auto [f1, f2] = tangent_frame(a);
  if (mink(a, a) < 0) {
    const double bx = mink(b, f1), by = mink(b, f2);
    const double cx = mink(c, f1), cy = mink(c, f2);
    const double diff = std::abs(std::atan2(by, bx) - std::atan2(cy, cx));
    return diff > std::numbers::pi ? 2 * std::numbers::pi - diff : diff;
  }
  // f1 timelike: coordinates (time, space) = (-<<x,f1>>, <<x,f2>>).
  const auto rapidity = [&](const MVec3& x) {
    const double t = -mink(x, f1);
    const double s = mink(x, f2);
    return std::abs(t) > std::abs(s) ? std::atanh(s / t) : std::atanh(t / s);
  };
  return std::abs(rapidity(b) - rapidity(c));
}

/// Direct 3x3 determinant by cofactor expansion along the first row.
inline double det_rows(const MVec3& a, const MVec3& b, const MVec3& c) {
  return a.x1 * (b.x2 * c.x3 - b.x3 * c.x2) - b.x1 * (a.x2 * c.x3 - a.x3 * c.x2) +
         c.x1 * (a.x2 * b.x3 - a.x3 * b.x2);
}

}  // namespace oracle
