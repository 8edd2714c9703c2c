#include "minktrig/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "minktrig/error.hpp"

namespace minktrig {

std::string_view to_string(Component c) noexcept {
  switch (c) {
    case Component::H2: return "H2";
    case Component::NegH2: return "-H2";
    case Component::DeSitter: return "S11";
  }
  return "unknown";
}

std::string_view to_string(SegmentKind k) noexcept {
  switch (k) {
    case SegmentKind::Hyperbolic: return "hyperbolic";
    case SegmentKind::AntipodalHyperbolic: return "antipodal_hyperbolic";
    case SegmentKind::DeSitterSpacelike: return "spacelike";
    case SegmentKind::DeSitterTimelike: return "timelike";
    case SegmentKind::DeSitterLightlike: return "lightlike";
    case SegmentKind::Point: return "point";
    case SegmentKind::Empty: return "empty";
  }
  return "unknown";
}

SurfacePoint SurfacePoint::operator-() const noexcept {
  Component c = component_;
  if (c == Component::H2) {
    c = Component::NegH2;
  } else if (c == Component::NegH2) {
    c = Component::H2;
  }
  return SurfacePoint(-coords_, c);
}

std::optional<SurfacePoint> classify_point(const MVec3& x, const Tolerances& tol) {
  if (!is_finite(x)) return std::nullopt;
  const double q = minkowski_product(x, x);
  if (std::abs(q + 1.0) <= tol.surf) {
    return SurfacePoint(x, x.x1 > 0.0 ? Component::H2 : Component::NegH2);
  }
  if (std::abs(q - 1.0) <= tol.surf) return SurfacePoint(x, Component::DeSitter);
  return std::nullopt;
}

SurfacePoint surface_point(const MVec3& x, const Tolerances& tol) {
  if (auto p = classify_point(x, tol)) return *p;
  std::ostringstream msg;
  msg.precision(17);
  msg << "(" << x.x1 << ", " << x.x2 << ", " << x.x3 << ") has <<x,x>> = "
      << minkowski_product(x, x);
  throw Error(ErrorCode::OffSurface, msg.str());
}

SurfacePoint transform(const Mat3& m, const SurfacePoint& p, const Tolerances& tol) {
  return surface_point(m * p.coords(), tol);
}

namespace {

double point_scale(const SurfacePoint& a) { return std::max(1.0, euclidean_norm(a.coords())); }

}  // namespace

bool same_point(const SurfacePoint& a, const SurfacePoint& b, const Tolerances& tol) noexcept {
  return euclidean_norm(a.coords() - b.coords()) <= tol.point * point_scale(a);
}

bool antipodal(const SurfacePoint& a, const SurfacePoint& b, const Tolerances& tol) noexcept {
  return euclidean_norm(a.coords() + b.coords()) <= tol.point * point_scale(a);
}

double checked_acos(double x, const Tolerances& tol) {
  if (x > 1.0 + tol.clamp || x < -1.0 - tol.clamp || std::isnan(x)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "arccos argument " << x << " outside [-1, 1]";
    throw Error(ErrorCode::DomainViolation, msg.str());
  }
  return std::acos(std::clamp(x, -1.0, 1.0));
}

double checked_acosh(double x, const Tolerances& tol) {
  if (x < 1.0 - tol.clamp || std::isnan(x)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "arcosh argument " << x << " below 1";
    throw Error(ErrorCode::DomainViolation, msg.str());
  }
  return std::acosh(std::max(x, 1.0));
}

ExtDistance distance(const SurfacePoint& a, const SurfacePoint& b, const Tolerances& tol) {
  if (a.component() != b.component()) return ExtDistance::infinite();
  const MVec3 diff = a.coords() - b.coords();
  const double g = minkowski_product(a.coords(), b.coords());
  // Half the Minkowski chord length: sinh(d/2) or sin(d/2). Better
  // conditioned than arcosh / arccos of the product for nearby points.
  const double half_chord = 0.5 * std::sqrt(std::abs(minkowski_product(diff, diff)));
  switch (a.component()) {
    case Component::H2:
    case Component::NegH2:
      // d_H(-a,-b) has the same product as d_H(a,b).
      checked_acosh(-g, tol);
      return ExtDistance(2.0 * std::asinh(half_chord));
    case Component::DeSitter: break;
  }
  switch (classify_vector(diff, tol)) {
    case CausalClass::Timelike:
      checked_acosh(g, tol);
      return ExtDistance(2.0 * std::asinh(half_chord));
    case CausalClass::Lightlike: return ExtDistance(0.0);
    case CausalClass::Spacelike: break;
  }
  if (g <= -1.0 && !antipodal(a, b, tol)) return ExtDistance::infinite();
  if (g >= 0.5) return ExtDistance(2.0 * std::asin(std::min(half_chord, 1.0)));
  return ExtDistance(checked_acos(g, tol));
}

SegmentKind segment_kind(const SurfacePoint& a, const SurfacePoint& b, const Tolerances& tol) {
  if (same_point(a, b, tol)) return SegmentKind::Point;
  if (antipodal(a, b, tol)) return SegmentKind::Empty;
  if (distance(a, b, tol).is_infinite()) return SegmentKind::Empty;
  switch (a.component()) {
    case Component::H2: return SegmentKind::Hyperbolic;
    case Component::NegH2: return SegmentKind::AntipodalHyperbolic;
    case Component::DeSitter: break;
  }
  switch (classify_plane(a.coords(), b.coords(), tol)) {
    case PlaneClass::Spacelike: return SegmentKind::DeSitterSpacelike;
    case PlaneClass::Lightlike: return SegmentKind::DeSitterLightlike;
    case PlaneClass::Timelike: return SegmentKind::DeSitterTimelike;
  }
  return SegmentKind::Empty;
}

namespace {

void require_segment(const SurfacePoint& a, const SurfacePoint& b, const Tolerances& tol) {
  if (same_point(a, b, tol)) throw Error(ErrorCode::CoincidentPoints, "a == b");
  if (antipodal(a, b, tol)) throw Error(ErrorCode::AntipodalPoints, "a == -b");
  if (distance(a, b, tol).is_infinite())
    throw Error(ErrorCode::InfiniteSeparation, "points cannot be joined by a geodesic");
}

}  // namespace

MVec3 tangent_vector(const SurfacePoint& a, const SurfacePoint& b, const Tolerances& tol) {
  require_segment(a, b, tol);
  const MVec3& A = a.coords();
  const MVec3& B = b.coords();
  if (a.component() == Component::DeSitter &&
      classify_plane(A, B, tol) == PlaneClass::Lightlike) {
    return B - A;
  }
  const double g = minkowski_product(A, B);
  const double denom = minkowski_norm(cross(A, B));
  if (a.component() != Component::DeSitter) return (B + g * A) / denom;
  return (B - g * A) / denom;
}

double segment_parameter_end(const SurfacePoint& a, const SurfacePoint& b,
                             const Tolerances& tol) {
  switch (segment_kind(a, b, tol)) {
    case SegmentKind::Point: return 0.0;
    case SegmentKind::Empty: throw Error(ErrorCode::EmptySegment, "segment is empty");
    case SegmentKind::DeSitterLightlike: return 1.0;
    default: return distance(a, b, tol).value();
  }
}

GeodesicSegment::GeodesicSegment(const SurfacePoint& a, const SurfacePoint& b,
                                 const Tolerances& tol)
    : a_(a.coords()), kind_(segment_kind(a, b, tol)) {
  if (kind_ == SegmentKind::Empty) throw Error(ErrorCode::EmptySegment, "segment is empty");
  if (kind_ == SegmentKind::Point) return;
  end_ = segment_parameter_end(a, b, tol);
  x_ = tangent_vector(a, b, tol);
}

MVec3 GeodesicSegment::at(double t) const {
  const double slack = 1e-12 * std::max(1.0, end_);
  if (!(t >= -slack && t <= end_ + slack)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "t = " << t << " outside [0, " << end_ << "]";
    throw Error(ErrorCode::ParamOutOfRange, msg.str());
  }
  switch (kind_) {
    case SegmentKind::Point: return a_;
    case SegmentKind::DeSitterLightlike: return a_ + t * x_;
    case SegmentKind::DeSitterSpacelike: return std::cos(t) * a_ + std::sin(t) * x_;
    default: return std::cosh(t) * a_ + std::sinh(t) * x_;
  }
}

MVec3 segment_point(const SurfacePoint& a, const SurfacePoint& b, double t,
                    const Tolerances& tol) {
  return GeodesicSegment(a, b, tol).at(t);
}

namespace {

/// Validates the two legs at a and returns their common kind.
SegmentKind leg_kind(const SurfacePoint& b, const SurfacePoint& a, const SurfacePoint& c,
                     const Tolerances& tol) {
  const SegmentKind kb = segment_kind(a, b, tol);
  const SegmentKind kc = segment_kind(a, c, tol);
  for (SegmentKind k : {kb, kc}) {
    if (k == SegmentKind::Empty || k == SegmentKind::Point)
      throw Error(ErrorCode::DegenerateLeg,
                  "angle leg is " + std::string(to_string(k)));
  }
  if (kb != kc)
    throw Error(ErrorCode::MixedSegmentKinds, std::string(to_string(kb)) + " vs " +
                                                  std::string(to_string(kc)));
  if (kb == SegmentKind::DeSitterLightlike)
    throw Error(ErrorCode::LightlikeLeg, "both legs are lightlike");
  return kb;
}

double wrap_angle(double product, Component at, const Tolerances& tol) {
  if (at == Component::DeSitter) return checked_acosh(std::abs(product), tol);
  return checked_acos(product, tol);
}

}  // namespace

double tangent_product(const SurfacePoint& b, const SurfacePoint& a, const SurfacePoint& c,
                       const Tolerances& tol) {
  leg_kind(b, a, c, tol);
  return minkowski_product(tangent_vector(a, b, tol), tangent_vector(a, c, tol));
}

double angle(const SurfacePoint& b, const SurfacePoint& a, const SurfacePoint& c,
             const Tolerances& tol) {
  return wrap_angle(tangent_product(b, a, c, tol), a.component(), tol);
}

double angle_via_cross(const SurfacePoint& b, const SurfacePoint& a, const SurfacePoint& c,
                       const Tolerances& tol) {
  leg_kind(b, a, c, tol);
  const MVec3 ab = normalize(cross(a.coords(), b.coords()), tol);
  const MVec3 ac = normalize(cross(a.coords(), c.coords()), tol);
  const double sign = a.component() == Component::DeSitter ? -1.0 : 1.0;
  return wrap_angle(sign * minkowski_product(ab, ac), a.component(), tol);
}

}  // namespace minktrig
