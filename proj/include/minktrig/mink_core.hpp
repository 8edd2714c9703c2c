#pragma once

#include <array>
#include <random>
#include <string_view>
#include <utility>

#include "minktrig/tolerances.hpp"

namespace minktrig {

/// A vector of R^3 carrying the Minkowski form -x1*y1 + x2*y2 + x3*y3.
/// x1 is the time coordinate.
struct MVec3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr double operator[](int i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }

  constexpr MVec3 operator-() const { return {-x1, -x2, -x3}; }
  constexpr MVec3& operator+=(const MVec3& o) {
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  constexpr MVec3& operator-=(const MVec3& o) {
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    return *this;
  }
  constexpr MVec3& operator*=(double s) {
    x1 *= s;
    x2 *= s;
    x3 *= s;
    return *this;
  }

  friend constexpr MVec3 operator+(MVec3 a, const MVec3& b) { return a += b; }
  friend constexpr MVec3 operator-(MVec3 a, const MVec3& b) { return a -= b; }
  friend constexpr MVec3 operator*(double s, MVec3 a) { return a *= s; }
  friend constexpr MVec3 operator*(MVec3 a, double s) { return a *= s; }
  friend constexpr MVec3 operator/(MVec3 a, double s) { return a *= (1.0 / s); }
  friend constexpr bool operator==(const MVec3&, const MVec3&) = default;
};

inline constexpr MVec3 e1{1.0, 0.0, 0.0};
inline constexpr MVec3 e2{0.0, 1.0, 0.0};
inline constexpr MVec3 e3{0.0, 0.0, 1.0};

enum class CausalClass { Timelike, Lightlike, Spacelike };
enum class PlaneClass { Spacelike, Lightlike, Timelike };

std::string_view to_string(CausalClass c) noexcept;
std::string_view to_string(PlaneClass c) noexcept;

// Euclidean helpers.
double dot(const MVec3& x, const MVec3& y) noexcept;
double euclidean_norm(const MVec3& x) noexcept;
bool is_finite(const MVec3& x) noexcept;

double minkowski_product(const MVec3& x, const MVec3& y) noexcept;
double minkowski_norm(const MVec3& x) noexcept;

/// x divided by its Minkowski norm. Throws LightlikeNormalization on the cone.
MVec3 normalize(const MVec3& x, const Tolerances& tol = kDefaultTolerances);

/// Sign of <<x,x>> with a relative band; the zero vector is Spacelike exactly.
CausalClass classify_vector(const MVec3& x, const Tolerances& tol = kDefaultTolerances) noexcept;

/// Ratio |<<x,x>>| / band, i.e. how far the classification sits from the
/// lightlike band (< 10 means "close call"). +inf for the zero vector.
double classification_margin(const MVec3& x, const Tolerances& tol = kDefaultTolerances) noexcept;

/// Euclidean cross product. J(x × y) is Minkowski-orthogonal to x and y.
MVec3 cross(const MVec3& x, const MVec3& y) noexcept;

/// The Lorentz involution diag(-1, 1, 1).
constexpr MVec3 j_transform(const MVec3& x) noexcept { return {-x.x1, x.x2, x.x3}; }

/// Determinant of the matrix with columns a, b, c.
double det3(const MVec3& a, const MVec3& b, const MVec3& c) noexcept;

/// Row-major 3x3 matrix acting on column vectors.
struct Mat3 {
  std::array<std::array<double, 3>, 3> m{};

  static constexpr Mat3 identity() { return Mat3{{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}; }
  static constexpr Mat3 from_columns(const MVec3& a, const MVec3& b, const MVec3& c) {
    return Mat3{{{{a.x1, b.x1, c.x1}, {a.x2, b.x2, c.x2}, {a.x3, b.x3, c.x3}}}};
  }

  constexpr double operator()(int r, int c) const { return m[r][c]; }
  constexpr MVec3 column(int c) const { return {m[0][c], m[1][c], m[2][c]}; }

  friend constexpr MVec3 operator*(const Mat3& a, const MVec3& x) {
    return {a.m[0][0] * x.x1 + a.m[0][1] * x.x2 + a.m[0][2] * x.x3,
            a.m[1][0] * x.x1 + a.m[1][1] * x.x2 + a.m[1][2] * x.x3,
            a.m[2][0] * x.x1 + a.m[2][1] * x.x2 + a.m[2][2] * x.x3};
  }
  friend constexpr Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j] + a.m[i][2] * b.m[2][j];
    return r;
  }
};

inline constexpr Mat3 kJ{{{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};

/// True iff M^T J M = J within tol.mat, i.e. the columns are a Minkowski
/// orthonormal basis.
bool is_lorentz(const Mat3& m, const Tolerances& tol = kDefaultTolerances) noexcept;

/// Rotation by `angle` about the e1 axis (acts on x2, x3).
Mat3 rotation_e1(double angle) noexcept;
/// Boost of the given rapidity in the x1-x2 plane; maps e1 to (cosh t, sinh t, 0).
Mat3 boost_x2(double rapidity) noexcept;

/// Rotation(phi1) * Boost(t) * Rotation(phi2), rapidity t uniform on
/// [0, max_rapidity], angles uniform on [0, 2pi). When `orthochronous` is
/// false the result is additionally time-reversed (J * M), so it swaps the
/// two hyperbolic sheets.
Mat3 random_lorentz(std::mt19937_64& rng, bool orthochronous, double max_rapidity = 3.0);

/// Minkowski-orthogonal basis (b1, b2) of span(u, v) with b1 spacelike.
/// Throws DegenerateSpan if u, v are linearly dependent.
std::pair<MVec3, MVec3> lorentz_orthogonal_basis(const MVec3& u, const MVec3& v,
                                                 const Tolerances& tol = kDefaultTolerances);

/// Type of span(u, v) read off its Minkowski normal J(u × v):
/// timelike normal => spacelike plane and vice versa.
PlaneClass classify_plane(const MVec3& u, const MVec3& v,
                          const Tolerances& tol = kDefaultTolerances);

}  // namespace minktrig
