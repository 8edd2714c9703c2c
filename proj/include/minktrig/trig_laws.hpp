#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "minktrig/triangles.hpp"

namespace minktrig {

/// The four triangle families with a full set of trigonometric laws.
enum class LawFamily { Hyp, SpatioNC, SpatioC, Tempo };

std::string_view to_string(LawFamily f) noexcept;

/// Sides and angles of a supported triangle. For SpatioC and Tempo the
/// vertices are cyclically relabelled so that the distinguished vertex (the
/// polar anchor, or the tempolateral apex) is A.
struct TriangleMeasurements {
  LawFamily family = LawFamily::Hyp;
  /// Vertex i here is vertex permutation[i] of the input triangle.
  std::array<int, 3> permutation{0, 1, 2};
  /// a, b, c; side i is opposite vertex i.
  std::array<double, 3> sides{};
  std::array<SegmentKind, 3> side_kinds{};
  /// alpha, beta, gamma, as returned by angle().
  std::array<double, 3> angles{};
  /// <<X_AB, X_AC>> at each vertex before wrapping.
  std::array<double, 3> tangent_products{};
  /// Orientation of each angle: -sign of the tangent product on the de Sitter
  /// surface, +1 in the hyperbolic plane.
  std::array<int, 3> angle_signs{1, 1, 1};
  /// Tempolateral apex (always vertex A after relabelling), as an index into
  /// the input triangle.
  std::optional<int> apex;
  /// Contractible spatiolateral: the side whose polar vertex is not strange
  /// (always side a after relabelling).
  std::optional<SideLabel> polar_anchor;
};

/// Throws UnsupportedFamily outside the four families and DegenerateTriangle
/// for degenerate input.
TriangleMeasurements measure(const Triangle& t, const Tolerances& tol = kDefaultTolerances);

/// |LHS - RHS| of the law of cosines for sides, one per side a, b, c.
std::array<double, 3> lcs_residuals(const TriangleMeasurements& m);

/// |LHS - RHS| of the law of cosines for angles, one per angle.
std::array<double, 3> lca_residuals(const TriangleMeasurements& m);

/// Law-of-sines ratios. Hyp: sin(alpha)/sinh(a); SpatioNC: sinh/sin;
/// SpatioC: sinh/sin; Tempo: sinh/sinh. In the last two the angles carry
/// their orientation signs and the ratio at A is negated.
std::array<double, 3> sines_ratios(const TriangleMeasurements& m);

/// Largest pairwise difference of the sines ratios.
double sines_residual(const std::array<double, 3>& ratios);

/// alpha + beta + gamma. Hyp only (UnsupportedFamily otherwise).
double angle_sum_check(const TriangleMeasurements& m);

/// a + b + c. Spatiolateral only (UnsupportedFamily otherwise).
double side_sum_check(const TriangleMeasurements& m);

struct TrigReport {
  TriangleMeasurements measurements;
  std::array<double, 3> lcs_residuals{};
  std::array<double, 3> lca_residuals{};
  std::array<double, 3> sines_ratios{};
  double sines_residual = 0.0;
  std::optional<double> angle_sum;
  std::optional<double> side_sum;

  LawFamily family() const { return measurements.family; }
  double max_residual() const;
};

TrigReport evaluate(const Triangle& t, const Tolerances& tol = kDefaultTolerances);

}  // namespace minktrig
