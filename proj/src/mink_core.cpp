#include "minktrig/mink_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "minktrig/error.hpp"

namespace minktrig {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LightlikeNormalization: return "LightlikeNormalization";
    case ErrorCode::DegenerateSpan: return "DegenerateSpan";
    case ErrorCode::OffSurface: return "OffSurface";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::AntipodalPoints: return "AntipodalPoints";
    case ErrorCode::InfiniteSeparation: return "InfiniteSeparation";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::EmptySegment: return "EmptySegment";
    case ErrorCode::LightlikeSegment: return "LightlikeSegment";
    case ErrorCode::MixedSegmentKinds: return "MixedSegmentKinds";
    case ErrorCode::LightlikeLeg: return "LightlikeLeg";
    case ErrorCode::DegenerateLeg: return "DegenerateLeg";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::DuplicateVertices: return "DuplicateVertices";
    case ErrorCode::NotSpatiolateral: return "NotSpatiolateral";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::PolarNonExistent: return "PolarNonExistent";
    case ErrorCode::RejectionBudgetExhausted: return "RejectionBudgetExhausted";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string_view to_string(CausalClass c) noexcept {
  switch (c) {
    case CausalClass::Timelike: return "timelike";
    case CausalClass::Lightlike: return "lightlike";
    case CausalClass::Spacelike: return "spacelike";
  }
  return "unknown";
}

std::string_view to_string(PlaneClass c) noexcept {
  switch (c) {
    case PlaneClass::Spacelike: return "spacelike";
    case PlaneClass::Lightlike: return "lightlike";
    case PlaneClass::Timelike: return "timelike";
  }
  return "unknown";
}

double dot(const MVec3& x, const MVec3& y) noexcept {
  return x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3;
}

double euclidean_norm(const MVec3& x) noexcept { return std::hypot(x.x1, x.x2, x.x3); }

bool is_finite(const MVec3& x) noexcept {
  return std::isfinite(x.x1) && std::isfinite(x.x2) && std::isfinite(x.x3);
}

double minkowski_product(const MVec3& x, const MVec3& y) noexcept {
  return -x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3;
}

double minkowski_norm(const MVec3& x) noexcept {
  return std::sqrt(std::abs(minkowski_product(x, x)));
}

namespace {

double light_band(const MVec3& x, const Tolerances& tol) noexcept {
  return tol.light * std::max(1.0, dot(x, x));
}

}  // namespace

CausalClass classify_vector(const MVec3& x, const Tolerances& tol) noexcept {
  if (x == MVec3{}) return CausalClass::Spacelike;
  const double q = minkowski_product(x, x);
  if (std::abs(q) <= light_band(x, tol)) return CausalClass::Lightlike;
  return q < 0.0 ? CausalClass::Timelike : CausalClass::Spacelike;
}

double classification_margin(const MVec3& x, const Tolerances& tol) noexcept {
  if (x == MVec3{}) return std::numeric_limits<double>::infinity();
  return std::abs(minkowski_product(x, x)) / light_band(x, tol);
}

MVec3 normalize(const MVec3& x, const Tolerances& tol) {
  if (classify_vector(x, tol) == CausalClass::Lightlike || x == MVec3{}) {
    std::ostringstream msg;
    msg << "cannot normalize (" << x.x1 << ", " << x.x2 << ", " << x.x3 << ")";
    throw Error(ErrorCode::LightlikeNormalization, msg.str());
  }
  return x / minkowski_norm(x);
}

MVec3 cross(const MVec3& x, const MVec3& y) noexcept {
  return {x.x2 * y.x3 - x.x3 * y.x2, x.x3 * y.x1 - x.x1 * y.x3, x.x1 * y.x2 - x.x2 * y.x1};
}

double det3(const MVec3& a, const MVec3& b, const MVec3& c) noexcept {
  return dot(cross(a, b), c);
}

bool is_lorentz(const Mat3& m, const Tolerances& tol) noexcept {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double g = minkowski_product(m.column(i), m.column(j));
      const double want = (i != j) ? 0.0 : (i == 0 ? -1.0 : 1.0);
      if (!(std::abs(g - want) <= tol.mat)) return false;
    }
  }
  return true;
}

Mat3 rotation_e1(double angle) noexcept {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return Mat3{{{{1, 0, 0}, {0, c, -s}, {0, s, c}}}};
}

Mat3 boost_x2(double rapidity) noexcept {
  const double c = std::cosh(rapidity);
  const double s = std::sinh(rapidity);
  return Mat3{{{{c, s, 0}, {s, c, 0}, {0, 0, 1}}}};
}

Mat3 random_lorentz(std::mt19937_64& rng, bool orthochronous, double max_rapidity) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> rapidity(0.0, max_rapidity);
  const double phi1 = angle(rng);
  const double t = rapidity(rng);
  const double phi2 = angle(rng);
  Mat3 m = rotation_e1(phi1) * boost_x2(t) * rotation_e1(phi2);
  if (!orthochronous) m = kJ * m;
  return m;
}

std::pair<MVec3, MVec3> lorentz_orthogonal_basis(const MVec3& u, const MVec3& v,
                                                 const Tolerances& tol) {
  if (euclidean_norm(cross(u, v)) <= tol.degen * euclidean_norm(u) * euclidean_norm(v) ||
      u == MVec3{} || v == MVec3{}) {
    throw Error(ErrorCode::DegenerateSpan, "spanning vectors are linearly dependent");
  }
  const double qu = minkowski_product(u, u);
  const double qv = minkowski_product(v, v);
  MVec3 b1 = qu >= qv ? u : v;
  MVec3 other = qu >= qv ? v : u;

  if (classify_vector(b1, tol) != CausalClass::Spacelike) {
    // Neither input is spacelike; every 2-plane still contains one.
    if (classify_vector(u + v, tol) == CausalClass::Spacelike) {
      b1 = u + v;
    } else if (classify_vector(u - v, tol) == CausalClass::Spacelike) {
      b1 = u - v;
    } else {
      // Largest eigenvector of the Gram matrix [[qu, g], [g, qv]].
      const double g = minkowski_product(u, v);
      const double mean = 0.5 * (qu + qv);
      const double lam = mean + std::hypot(0.5 * (qu - qv), g);
      const MVec3 w = std::abs(g) > 0.0 ? (lam - qv) * u + g * v : (qu >= qv ? u : v);
      b1 = w;
    }
    other = u;
    if (euclidean_norm(cross(b1, other)) <= tol.degen * euclidean_norm(b1) * euclidean_norm(other))
      other = v;
  }
  const MVec3 b2 = other - (minkowski_product(other, b1) / minkowski_product(b1, b1)) * b1;
  return {b1, b2};
}

PlaneClass classify_plane(const MVec3& u, const MVec3& v, const Tolerances& tol) {
  const MVec3 n = cross(u, v);
  if (euclidean_norm(n) <= tol.degen * euclidean_norm(u) * euclidean_norm(v) || n == MVec3{}) {
    throw Error(ErrorCode::DegenerateSpan, "spanning vectors are linearly dependent");
  }
  switch (classify_vector(j_transform(n), tol)) {
    case CausalClass::Timelike: return PlaneClass::Spacelike;
    case CausalClass::Lightlike: return PlaneClass::Lightlike;
    case CausalClass::Spacelike: return PlaneClass::Timelike;
  }
  return PlaneClass::Timelike;
}

}  // namespace minktrig
