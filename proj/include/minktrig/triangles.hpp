#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "minktrig/surfaces.hpp"

namespace minktrig {

enum class Family { Hyperbolic, AntipodalHyperbolic, Proper, Strange };

enum class ProperKind {
  SpatiolateralContractible,
  SpatiolateralNonContractible,
  Chorosceles,
  Tempolateral,
  Chronosceles,
  Lucilateral,
  BimetricalChorosceles,
  PhotoscelesSpacelikeBase,
  BimetricalChronosceles,
  PhotoscelesTimelikeBase,
  Multiple,
};

/// Side labels follow the vertex opposite: side a joins B and C.
enum class SideLabel { a, b, c };

std::string_view to_string(Family f) noexcept;
std::string_view to_string(ProperKind k) noexcept;
std::string_view to_string(SideLabel s) noexcept;

/// Three pairwise distinct points of the unit quadric.
class Triangle {
 public:
  /// Throws DuplicateVertices if two vertices coincide.
  static Triangle make(const SurfacePoint& a, const SurfacePoint& b, const SurfacePoint& c,
                       const Tolerances& tol = kDefaultTolerances);
  /// Validates raw coordinates on the quadric first (OffSurface otherwise).
  static Triangle from_coords(const MVec3& a, const MVec3& b, const MVec3& c,
                              const Tolerances& tol = kDefaultTolerances);

  const SurfacePoint& vertex(int i) const { return v_[static_cast<std::size_t>(i)]; }
  const SurfacePoint& A() const { return v_[0]; }
  const SurfacePoint& B() const { return v_[1]; }
  const SurfacePoint& C() const { return v_[2]; }
  const std::array<SurfacePoint, 3>& vertices() const { return v_; }

  /// Endpoints of the side opposite vertex i, in cyclic order (i+1, i+2).
  const SurfacePoint& side_start(int i) const { return vertex((i + 1) % 3); }
  const SurfacePoint& side_end(int i) const { return vertex((i + 2) % 3); }

  /// Vertex i of the result is vertex perm[i] of this triangle.
  Triangle permuted(const std::array<int, 3>& perm) const;
  Triangle transformed(const Mat3& m, const Tolerances& tol = kDefaultTolerances) const;

 private:
  explicit Triangle(std::array<SurfacePoint, 3> v) : v_(std::move(v)) {}
  std::array<SurfacePoint, 3> v_;
};

struct SideReport {
  SideLabel label = SideLabel::a;
  SegmentKind kind = SegmentKind::Empty;
  ExtDistance length;
  /// Type of the plane through the two endpoints; empty for antipodal pairs.
  std::optional<PlaneClass> plane;
  /// Endpoints on different components of the quadric.
  bool strange = false;
  /// The plane normal (or, on S11, the difference vector) sits near the edge
  /// of the lightlike band (between 0.1x and 10x of it), so the kind is a
  /// close call. Exactly lightlike sides sit deep inside the band and are not
  /// flagged.
  bool close_call = false;
};

struct TriangleClass {
  Family family = Family::Strange;
  std::optional<ProperKind> proper_kind;
  /// Empty (impossible) sides between points of the same component.
  std::vector<SideLabel> impossible_sides;
  bool degenerate = false;
  /// Some pair of vertices is antipodal.
  bool opposite_vertices = false;
  std::array<Component, 3> components{};
  std::array<SideReport, 3> sides{};

  bool is_impossible() const { return !impossible_sides.empty(); }
  /// Number of sides of the given kind.
  int count(SegmentKind k) const;
};

TriangleClass classify_triangle(const Triangle& t, const Tolerances& tol = kDefaultTolerances);

/// |det(A,B,C)| <= tol.degen * |A||B||C|.
bool is_degenerate(const Triangle& t, const Tolerances& tol = kDefaultTolerances);

/// Winding number about the origin of the closed curve A->B->C->A projected
/// to the e2-e3 plane. All three sides must be spacelike de Sitter segments.
int winding_number(const Triangle& t, const Tolerances& tol = kDefaultTolerances);

/// Winding number zero. Throws NotSpatiolateral for other kinds.
bool is_contractible(const Triangle& t, const Tolerances& tol = kDefaultTolerances);

/// The projected vertices lie strictly on one side of some line through the
/// origin (necessary for contractibility, not sufficient).
bool projected_vertices_in_half_plane(const Triangle& t) noexcept;

/// Vertices at which the tangent vectors towards the other two vertices have
/// opposite-sign first components. For non-degenerate tempolateral triangles
/// there is exactly one. Throws DegenerateTriangle when a sign is within the
/// lightlike band of zero.
std::vector<int> opposite_sign_vertices(const Triangle& t,
                                        const Tolerances& tol = kDefaultTolerances);

struct InequalityReport {
  /// Every side is at most the sum of the other two (inf absorbing).
  bool holds = false;
  /// Lengths of sides a, b, c.
  std::array<ExtDistance, 3> lengths{};
  /// Verdict implied by the classification theorems, where one exists.
  std::optional<bool> predicted;
};

InequalityReport triangle_inequality_report(const Triangle& t,
                                            const Tolerances& tol = kDefaultTolerances);

}  // namespace minktrig
