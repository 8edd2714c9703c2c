#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "minktrig/triangles.hpp"

namespace minktrig {

enum class NonExistenceReason { OppositeVertices, LightlikeSidePlane };

std::string_view to_string(NonExistenceReason r) noexcept;

struct PolarExistence {
  bool exists = true;
  std::optional<NonExistenceReason> reason;
  /// Side whose cross product is zero or lightlike.
  std::optional<SideLabel> side;

  explicit operator bool() const noexcept { return exists; }
};

/// A polar triangle exists unless some pair of vertices has a zero or
/// lightlike cross product.
PolarExistence polar_exists(const Triangle& t, const Tolerances& tol = kDefaultTolerances);

enum class PolarStatus { Triangle, ZeroTriangle };

struct PolarResult {
  PolarStatus status = PolarStatus::ZeroTriangle;
  /// A', B', C'; all zero for a degenerate input.
  std::array<MVec3, 3> vertices{};
  /// sign det(A, B, C).
  int epsilon = 0;

  /// The polar vertices as a Triangle. Throws DegenerateTriangle for the
  /// zero triangle.
  Triangle triangle(const Tolerances& tol = kDefaultTolerances) const;
};

/// A' = eps (B×C)^, B' = eps (C×A)^, C' = eps (A×B)^ with eps = sign det.
/// Throws PolarNonExistent when polar_exists fails.
PolarResult polar_triangle(const Triangle& t, const Tolerances& tol = kDefaultTolerances);

/// The J-conjugated variant of the polar vertices. Only a diagnostic: it
/// moves the triangle but keeps lengths, angles and type.
std::array<MVec3, 3> minkowski_polar_vertices(const PolarResult& p);

/// Coarse type of a polar triangle, as the mapping theorems state them.
enum class PolarOutcome {
  NonExistent,
  ZeroTriangle,
  /// Hyperbolic or antipodal hyperbolic.
  PlusMinusHyperbolic,
  SpatiolateralContractible,
  SpatiolateralNonContractible,
  Tempolateral,
  Chorosceles,
  Chronosceles,
  /// Any strange triangle.
  Strange,
  /// Strange, all vertices on the two hyperbolic sheets.
  StrangeImproper,
  /// Strange with the same component pattern as the input (and the same
  /// kind of de Sitter side when it has one).
  StrangeSameType,
  /// Proper with three impossible sides.
  ImpossibleAllSides,
  /// Proper, two impossible sides and one timelike side.
  ImpossibleOneTimelikeSide,
  /// Proper, one impossible side and two timelike sides.
  ImpossibleTwoTimelikeSides,
  /// Proper impossible with at least one spacelike side.
  ImpossibleWithSpacelikeSide,
};

std::string_view to_string(PolarOutcome o) noexcept;

/// The set of outcomes the theorems allow for the polar of a triangle of the
/// given class; a single element unless the theorem is a disjunction.
struct PolarPrediction {
  std::vector<PolarOutcome> outcomes;
  TriangleClass source;

  bool is_nonexistent() const;
  /// True iff `polar` (the classification of the computed polar triangle)
  /// matches one of the outcomes.
  bool matches(const TriangleClass& polar) const;
};

PolarPrediction predict_polar_type(const TriangleClass& c);

/// Whether a single outcome describes `polar`; `source` is the class of the
/// original triangle (needed for StrangeSameType).
bool outcome_matches(PolarOutcome o, const TriangleClass& polar, const TriangleClass& source);

struct PolarCheck {
  PolarPrediction prediction;
  /// NonExistent or ZeroTriangle when no polar triangle was produced;
  /// otherwise empty and polar_class holds its classification.
  std::optional<PolarOutcome> observed_status;
  std::optional<TriangleClass> polar_class;
  bool consistent = false;
};

/// Classifies t, predicts its polar type, computes the polar and compares.
PolarCheck check_polar_type(const Triangle& t, const Tolerances& tol = kDefaultTolerances);

}  // namespace minktrig
