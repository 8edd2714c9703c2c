#include "minktrig/polar.hpp"

#include <algorithm>
#include <cmath>

#include "minktrig/error.hpp"

namespace minktrig {

std::string_view to_string(NonExistenceReason r) noexcept {
  switch (r) {
    case NonExistenceReason::OppositeVertices: return "OppositeVertices";
    case NonExistenceReason::LightlikeSidePlane: return "LightlikeSidePlane";
  }
  return "Unknown";
}

std::string_view to_string(PolarOutcome o) noexcept {
  switch (o) {
    case PolarOutcome::NonExistent: return "nonexistent";
    case PolarOutcome::ZeroTriangle: return "zero_triangle";
    case PolarOutcome::PlusMinusHyperbolic: return "plus_minus_hyperbolic";
    case PolarOutcome::SpatiolateralContractible: return "spatiolateral_contractible";
    case PolarOutcome::SpatiolateralNonContractible: return "spatiolateral_noncontractible";
    case PolarOutcome::Tempolateral: return "tempolateral";
    case PolarOutcome::Chorosceles: return "chorosceles";
    case PolarOutcome::Chronosceles: return "chronosceles";
    case PolarOutcome::Strange: return "strange";
    case PolarOutcome::StrangeImproper: return "strange_improper";
    case PolarOutcome::StrangeSameType: return "strange_same_type";
    case PolarOutcome::ImpossibleAllSides: return "impossible_all_sides";
    case PolarOutcome::ImpossibleOneTimelikeSide: return "impossible_one_timelike_side";
    case PolarOutcome::ImpossibleTwoTimelikeSides: return "impossible_two_timelike_sides";
    case PolarOutcome::ImpossibleWithSpacelikeSide: return "impossible_with_spacelike_side";
  }
  return "unknown";
}

PolarExistence polar_exists(const Triangle& t, const Tolerances& tol) {
  PolarExistence out;
  for (int i = 0; i < 3; ++i) {
    const MVec3& p = t.side_start(i).coords();
    const MVec3& q = t.side_end(i).coords();
    const MVec3 n = cross(p, q);
    if (euclidean_norm(n) <= tol.degen * euclidean_norm(p) * euclidean_norm(q)) {
      out.reason = NonExistenceReason::OppositeVertices;
    } else if (classify_vector(n, tol) == CausalClass::Lightlike) {
      out.reason = NonExistenceReason::LightlikeSidePlane;
    } else {
      continue;
    }
    out.exists = false;
    out.side = static_cast<SideLabel>(i);
    return out;
  }
  return out;
}

Triangle PolarResult::triangle(const Tolerances& tol) const {
  if (status == PolarStatus::ZeroTriangle)
    throw Error(ErrorCode::DegenerateTriangle, "the polar of a degenerate triangle is the zero vector");
  return Triangle::from_coords(vertices[0], vertices[1], vertices[2], tol);
}

PolarResult polar_triangle(const Triangle& t, const Tolerances& tol) {
  const PolarExistence ex = polar_exists(t, tol);
  if (!ex) {
    throw Error(ErrorCode::PolarNonExistent,
                std::string(to_string(*ex.reason)) + " at side " + std::string(to_string(*ex.side)));
  }
  PolarResult out;
  if (is_degenerate(t, tol)) return out;

  const MVec3& a = t.A().coords();
  const MVec3& b = t.B().coords();
  const MVec3& c = t.C().coords();
  out.status = PolarStatus::Triangle;
  out.epsilon = det3(a, b, c) > 0.0 ? 1 : -1;
  const double eps = out.epsilon;
  out.vertices = {eps * normalize(cross(b, c), tol), eps * normalize(cross(c, a), tol),
                  eps * normalize(cross(a, b), tol)};
  return out;
}

std::array<MVec3, 3> minkowski_polar_vertices(const PolarResult& p) {
  return {j_transform(p.vertices[0]), j_transform(p.vertices[1]), j_transform(p.vertices[2])};
}

namespace {

int count_component(const TriangleClass& c, Component comp) {
  return static_cast<int>(std::count(c.components.begin(), c.components.end(), comp));
}

/// The side joining two de Sitter vertices of a strange triangle, if any.
std::optional<SegmentKind> de_sitter_side(const TriangleClass& c) {
  for (int i = 0; i < 3; ++i) {
    const Component p = c.components[static_cast<std::size_t>((i + 1) % 3)];
    const Component q = c.components[static_cast<std::size_t>((i + 2) % 3)];
    if (p == Component::DeSitter && q == Component::DeSitter)
      return c.sides[static_cast<std::size_t>(i)].kind;
  }
  return std::nullopt;
}

bool hyperbolic_vertices_on_one_sheet(const TriangleClass& c) {
  return count_component(c, Component::H2) == 0 || count_component(c, Component::NegH2) == 0;
}

bool has_lightlike_side_plane(const TriangleClass& c) {
  return std::any_of(c.sides.begin(), c.sides.end(), [](const SideReport& s) {
    return s.plane == PlaneClass::Lightlike;
  });
}

}  // namespace

PolarPrediction predict_polar_type(const TriangleClass& c) {
  using O = PolarOutcome;
  PolarPrediction out;
  out.source = c;
  auto& o = out.outcomes;

  if (c.opposite_vertices || has_lightlike_side_plane(c)) {
    o = {O::NonExistent};
    return out;
  }
  if (c.degenerate) {
    o = {O::ZeroTriangle};
    return out;
  }
  switch (c.family) {
    case Family::Hyperbolic:
    case Family::AntipodalHyperbolic:
      o = {O::SpatiolateralNonContractible};
      return out;
    case Family::Strange:
      if (count_component(c, Component::DeSitter) == 0) {
        o = {O::SpatiolateralContractible};
      } else {
        o = {O::StrangeSameType, O::Chorosceles, O::Chronosceles, O::ImpossibleWithSpacelikeSide};
      }
      return out;
    case Family::Proper: break;
  }

  if (c.proper_kind) {
    switch (*c.proper_kind) {
      case ProperKind::SpatiolateralNonContractible: o = {O::PlusMinusHyperbolic}; break;
      case ProperKind::SpatiolateralContractible: o = {O::StrangeImproper}; break;
      case ProperKind::Chorosceles:
      case ProperKind::Chronosceles: o = {O::Strange}; break;
      case ProperKind::Tempolateral: o = {O::ImpossibleOneTimelikeSide}; break;
      default: o = {O::NonExistent}; break;
    }
    return out;
  }

  const int impossible = static_cast<int>(c.impossible_sides.size());
  const int spacelike = c.count(SegmentKind::DeSitterSpacelike);
  const int timelike = c.count(SegmentKind::DeSitterTimelike);
  if (impossible == 3) {
    o = {O::ImpossibleAllSides};
  } else if (spacelike > 0) {
    o = {O::Strange};
  } else if (impossible == 2 && timelike == 1) {
    o = {O::Tempolateral, O::ImpossibleOneTimelikeSide};
  } else {
    o = {O::ImpossibleTwoTimelikeSides};
  }
  return out;
}

bool outcome_matches(PolarOutcome o, const TriangleClass& polar, const TriangleClass& source) {
  using O = PolarOutcome;
  const bool proper = polar.family == Family::Proper;
  const int impossible = static_cast<int>(polar.impossible_sides.size());
  switch (o) {
    case O::NonExistent:
    case O::ZeroTriangle: return false;
    case O::PlusMinusHyperbolic:
      return polar.family == Family::Hyperbolic || polar.family == Family::AntipodalHyperbolic;
    case O::SpatiolateralContractible:
      return polar.proper_kind == ProperKind::SpatiolateralContractible;
    case O::SpatiolateralNonContractible:
      return polar.proper_kind == ProperKind::SpatiolateralNonContractible;
    case O::Tempolateral: return polar.proper_kind == ProperKind::Tempolateral;
    case O::Chorosceles: return polar.proper_kind == ProperKind::Chorosceles;
    case O::Chronosceles: return polar.proper_kind == ProperKind::Chronosceles;
    case O::Strange: return polar.family == Family::Strange;
    case O::StrangeImproper:
      return polar.family == Family::Strange && count_component(polar, Component::DeSitter) == 0;
    case O::StrangeSameType:
      return polar.family == Family::Strange && source.family == Family::Strange &&
             count_component(polar, Component::DeSitter) ==
                 count_component(source, Component::DeSitter) &&
             hyperbolic_vertices_on_one_sheet(polar) == hyperbolic_vertices_on_one_sheet(source) &&
             de_sitter_side(polar) == de_sitter_side(source);
    case O::ImpossibleAllSides: return proper && impossible == 3;
    case O::ImpossibleOneTimelikeSide:
      return proper && impossible == 2 && polar.count(SegmentKind::DeSitterTimelike) == 1;
    case O::ImpossibleTwoTimelikeSides:
      return proper && impossible == 1 && polar.count(SegmentKind::DeSitterTimelike) == 2;
    case O::ImpossibleWithSpacelikeSide:
      return proper && impossible > 0 && polar.count(SegmentKind::DeSitterSpacelike) > 0;
  }
  return false;
}

bool PolarPrediction::is_nonexistent() const {
  return std::find(outcomes.begin(), outcomes.end(), PolarOutcome::NonExistent) != outcomes.end();
}

bool PolarPrediction::matches(const TriangleClass& polar) const {
  return std::any_of(outcomes.begin(), outcomes.end(),
                     [&](PolarOutcome o) { return outcome_matches(o, polar, source); });
}

PolarCheck check_polar_type(const Triangle& t, const Tolerances& tol) {
  PolarCheck out;
  out.prediction = predict_polar_type(classify_triangle(t, tol));
  const auto predicted = [&](PolarOutcome o) {
    const auto& v = out.prediction.outcomes;
    return std::find(v.begin(), v.end(), o) != v.end();
  };
  if (!polar_exists(t, tol)) {
    out.observed_status = PolarOutcome::NonExistent;
    out.consistent = predicted(PolarOutcome::NonExistent);
    return out;
  }
  const PolarResult p = polar_triangle(t, tol);
  if (p.status == PolarStatus::ZeroTriangle) {
    out.observed_status = PolarOutcome::ZeroTriangle;
    out.consistent = predicted(PolarOutcome::ZeroTriangle);
    return out;
  }
  out.polar_class = classify_triangle(p.triangle(tol), tol);
  out.consistent = out.prediction.matches(*out.polar_class);
  return out;
}

}  // namespace minktrig
