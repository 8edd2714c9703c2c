#pragma once

#include <limits>
#include <optional>
#include <string_view>

#include "minktrig/mink_core.hpp"

namespace minktrig {

/// Component of the unit quadric |<<x,x>>| = 1.
enum class Component { H2, NegH2, DeSitter };

std::string_view to_string(Component c) noexcept;

/// A point of the unit quadric tagged with its component. Only obtainable
/// through classify_point (or by negating / transforming an existing point,
/// which re-runs the check), so the tag is always consistent.
class SurfacePoint {
 public:
  const MVec3& coords() const noexcept { return coords_; }
  Component component() const noexcept { return component_; }

  /// The antipode -x (swaps H2 and -H2, keeps de Sitter points on S^{1,1}).
  SurfacePoint operator-() const noexcept;

 private:
  SurfacePoint(const MVec3& x, Component c) : coords_(x), component_(c) {}
  friend std::optional<SurfacePoint> classify_point(const MVec3& x, const Tolerances& tol);

  MVec3 coords_;
  Component component_;
};

/// Tags x with its component, or std::nullopt (OffSurface) if x is not within
/// tol.surf of the quadric or has non-finite entries.
std::optional<SurfacePoint> classify_point(const MVec3& x,
                                           const Tolerances& tol = kDefaultTolerances);

/// classify_point, throwing OffSurface on failure.
SurfacePoint surface_point(const MVec3& x, const Tolerances& tol = kDefaultTolerances);

/// Image of p under the linear map m (re-validated on the quadric).
SurfacePoint transform(const Mat3& m, const SurfacePoint& p,
                       const Tolerances& tol = kDefaultTolerances);

bool same_point(const SurfacePoint& a, const SurfacePoint& b,
                const Tolerances& tol = kDefaultTolerances) noexcept;
bool antipodal(const SurfacePoint& a, const SurfacePoint& b,
               const Tolerances& tol = kDefaultTolerances) noexcept;

/// Non-negative real or +infinity.
class ExtDistance {
 public:
  constexpr ExtDistance() = default;
  constexpr explicit ExtDistance(double v) : value_(v) {}
  static constexpr ExtDistance infinite() {
    return ExtDistance(std::numeric_limits<double>::infinity());
  }

  constexpr double value() const noexcept { return value_; }
  constexpr bool is_infinite() const noexcept {
    return value_ == std::numeric_limits<double>::infinity();
  }
  constexpr bool is_finite() const noexcept { return !is_infinite(); }

  friend constexpr ExtDistance operator+(ExtDistance a, ExtDistance b) {
    return ExtDistance(a.value_ + b.value_);
  }
  friend constexpr bool operator==(ExtDistance, ExtDistance) = default;

 private:
  double value_ = 0.0;
};

enum class SegmentKind {
  Hyperbolic,
  AntipodalHyperbolic,
  DeSitterSpacelike,
  DeSitterTimelike,
  DeSitterLightlike,
  Point,
  Empty,
};

std::string_view to_string(SegmentKind k) noexcept;

/// Generalized de Sitter distance: d_H on H2, d_H(-a,-b) on -H2, the
/// four-case proper distance on S^{1,1}, +inf across components.
///
/// On S^{1,1} the cases are tried in order: a-b timelike -> arcosh<<a,b>>;
/// a-b lightlike -> 0; <<a,b>> <= -1 and a != -b -> inf; otherwise
/// arccos<<a,b>>.
ExtDistance distance(const SurfacePoint& a, const SurfacePoint& b,
                     const Tolerances& tol = kDefaultTolerances);

/// Tangent vector X_AB at a pointing towards b; Minkowski-orthogonal to a and
/// normalized except on lightlike spans (where it is b - a).
MVec3 tangent_vector(const SurfacePoint& a, const SurfacePoint& b,
                     const Tolerances& tol = kDefaultTolerances);

SegmentKind segment_kind(const SurfacePoint& a, const SurfacePoint& b,
                         const Tolerances& tol = kDefaultTolerances);

/// Upper end T of the segment parameter: 1 for lightlike segments, the
/// distance otherwise. Throws EmptySegment for empty segments.
double segment_parameter_end(const SurfacePoint& a, const SurfacePoint& b,
                             const Tolerances& tol = kDefaultTolerances);

/// Point on the segment from a to b at parameter t in [0, T].
MVec3 segment_point(const SurfacePoint& a, const SurfacePoint& b, double t,
                    const Tolerances& tol = kDefaultTolerances);

/// The segment from a to b with its kind, tangent and parameter range
/// resolved once, for evaluating many points.
class GeodesicSegment {
 public:
  /// Throws EmptySegment.
  GeodesicSegment(const SurfacePoint& a, const SurfacePoint& b,
                  const Tolerances& tol = kDefaultTolerances);

  SegmentKind kind() const noexcept { return kind_; }
  double end() const noexcept { return end_; }
  /// Throws ParamOutOfRange outside [0, end()] (with a relative slack of 1e-12).
  MVec3 at(double t) const;

 private:
  MVec3 a_;
  MVec3 x_;
  SegmentKind kind_;
  double end_ = 0.0;
};

/// Angle at vertex a between the segments towards b and c.
double angle(const SurfacePoint& b, const SurfacePoint& a, const SurfacePoint& c,
             const Tolerances& tol = kDefaultTolerances);

/// <<X_AB, X_AC>> before the arccos / arcosh wrapping; its sign carries the
/// orientation information the unsigned angle drops.
double tangent_product(const SurfacePoint& b, const SurfacePoint& a, const SurfacePoint& c,
                       const Tolerances& tol = kDefaultTolerances);

/// Same angle, computed from normalized cross products A×B, A×C instead of
/// tangent vectors (sign flipped on S^{1,1}).
double angle_via_cross(const SurfacePoint& b, const SurfacePoint& a, const SurfacePoint& c,
                       const Tolerances& tol = kDefaultTolerances);

/// arccos / arcosh with the tol.clamp band; outside the band they throw
/// DomainViolation instead of clamping silently.
double checked_acos(double x, const Tolerances& tol = kDefaultTolerances);
double checked_acosh(double x, const Tolerances& tol = kDefaultTolerances);

}  // namespace minktrig
