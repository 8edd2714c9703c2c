#pragma once

// Named triangles shared by the test binaries.

#include <cmath>
#include <numbers>

#include "minktrig/triangles.hpp"

namespace fixture {

using minktrig::MVec3;
using minktrig::Triangle;

inline const double kSqrt2 = std::sqrt(2.0);
inline const double kSqrt3 = std::sqrt(3.0);

inline const MVec3 kW{1.0 / 7, 5.0 / 7, 5.0 / 7};

inline Triangle tri(const MVec3& a, const MVec3& b, const MVec3& c) {
  return Triangle::from_coords(a, b, c);
}

/// Hyperbolic, sides arcosh 2, arcosh 3, arcosh 2.
inline Triangle hyperbolic() { return tri({kSqrt2, 1, 0}, {kSqrt2, 0, 1}, {kSqrt2, -1, 0}); }

inline Triangle spatio_contractible() { return tri(minktrig::e2, minktrig::e3, kW); }
inline Triangle spatio_noncontractible() { return tri(minktrig::e2, minktrig::e3, -kW); }

// The six inequality examples: three chronosceles, three chorosceles.
inline Triangle chrono_fails_1() {
  return tri(minktrig::e2, minktrig::e3, {30 * kSqrt2 / 41, 59 * kSqrt2 / 82, 59 * kSqrt2 / 82});
}
inline Triangle chrono_fails_2() { return tri(minktrig::e2, {0, kSqrt3 / 2, -0.5}, {41, 29, 29}); }
inline Triangle chrono_holds() { return tri(minktrig::e2, {0, kSqrt2 / 2, kSqrt2 / 2}, {41, 29, 29}); }
inline Triangle choro_fails_1() { return tri({1, 0, kSqrt2}, {-1, 0, kSqrt2}, {0, kSqrt3 / 2, 0.5}); }
inline Triangle choro_fails_2() {
  const double phi = 6 * std::numbers::pi / 25;
  return tri({1, 0, kSqrt2}, {20.0 / 21, 0, 29.0 / 21}, {0, std::cos(phi), std::sin(phi)});
}
inline Triangle choro_holds() { return tri({1, 0, kSqrt2}, minktrig::e3, {0, kSqrt3 / 2, 0.5}); }

}  // namespace fixture
