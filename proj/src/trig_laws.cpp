#include "minktrig/trig_laws.hpp"

#include <algorithm>
#include <cmath>

#include "minktrig/error.hpp"
#include "minktrig/polar.hpp"

namespace minktrig {

std::string_view to_string(LawFamily f) noexcept {
  switch (f) {
    case LawFamily::Hyp: return "hyperbolic";
    case LawFamily::SpatioNC: return "spatiolateral_noncontractible";
    case LawFamily::SpatioC: return "spatiolateral_contractible";
    case LawFamily::Tempo: return "tempolateral";
  }
  return "unknown";
}

namespace {

LawFamily law_family(const TriangleClass& cls) {
  if (cls.family == Family::Hyperbolic || cls.family == Family::AntipodalHyperbolic)
    return LawFamily::Hyp;
  if (cls.family == Family::Proper && cls.proper_kind) {
    switch (*cls.proper_kind) {
      case ProperKind::SpatiolateralNonContractible: return LawFamily::SpatioNC;
      case ProperKind::SpatiolateralContractible: return LawFamily::SpatioC;
      case ProperKind::Tempolateral: return LawFamily::Tempo;
      default: break;
    }
  }
  std::string what(to_string(cls.family));
  if (cls.proper_kind) what += "/" + std::string(to_string(*cls.proper_kind));
  throw Error(ErrorCode::UnsupportedFamily, "no trigonometric laws for " + what);
}

/// The vertex whose polar vertex lies on the other hyperbolic sheet.
int polar_anchor_vertex(const Triangle& t, const Tolerances& tol) {
  const PolarResult p = polar_triangle(t, tol);
  std::array<bool, 3> upper{};
  for (int i = 0; i < 3; ++i) upper[static_cast<std::size_t>(i)] = p.vertices[static_cast<std::size_t>(i)].x1 > 0.0;
  for (int i = 0; i < 3; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (upper[k] != upper[(k + 1) % 3] && upper[k] != upper[(k + 2) % 3]) return i;
  }
  throw Error(ErrorCode::DegenerateTriangle, "polar triangle has no vertex on a sheet of its own");
}

}  // namespace

TriangleMeasurements measure(const Triangle& input, const Tolerances& tol) {
  const TriangleClass cls = classify_triangle(input, tol);
  TriangleMeasurements m;
  m.family = law_family(cls);
  if (cls.degenerate) throw Error(ErrorCode::DegenerateTriangle, "degenerate triangle");

  int special = 0;
  if (m.family == LawFamily::SpatioC) {
    special = polar_anchor_vertex(input, tol);
    m.polar_anchor = SideLabel::a;
  } else if (m.family == LawFamily::Tempo) {
    const std::vector<int> apex = opposite_sign_vertices(input, tol);
    if (apex.size() != 1)
      throw Error(ErrorCode::DegenerateTriangle, "tempolateral triangle without a unique apex");
    special = apex.front();
    m.apex = special;
  }
  m.permutation = {special, (special + 1) % 3, (special + 2) % 3};
  const Triangle t = input.permuted(m.permutation);

  for (int i = 0; i < 3; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const SurfacePoint& v = t.vertex(i);
    const SurfacePoint& p = t.side_start(i);
    const SurfacePoint& q = t.side_end(i);
    m.sides[k] = distance(p, q, tol).value();
    m.side_kinds[k] = segment_kind(p, q, tol);
    m.tangent_products[k] = tangent_product(p, v, q, tol);
    m.angles[k] = angle(p, v, q, tol);
    if (v.component() == Component::DeSitter) m.angle_signs[k] = m.tangent_products[k] > 0.0 ? -1 : 1;
  }
  return m;
}

namespace {

/// +1 or -1 in front of the mixed term of equation i. Only the equation of
/// the distinguished vertex A differs from the others.
double lcs_sign(LawFamily f, int i) {
  switch (f) {
    case LawFamily::Hyp:
    case LawFamily::SpatioNC: return -1.0;
    case LawFamily::SpatioC: return i == 0 ? -1.0 : 1.0;
    case LawFamily::Tempo: return i == 0 ? 1.0 : -1.0;
  }
  return 0.0;
}

double lca_sign(LawFamily f, int i) {
  switch (f) {
    case LawFamily::Hyp:
    case LawFamily::SpatioNC: return 1.0;
    case LawFamily::SpatioC:
    case LawFamily::Tempo: return i == 0 ? 1.0 : -1.0;
  }
  return 0.0;
}

}  // namespace

std::array<double, 3> lcs_residuals(const TriangleMeasurements& m) {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const double a = m.sides[static_cast<std::size_t>(i)];
    const double b = m.sides[static_cast<std::size_t>((i + 1) % 3)];
    const double c = m.sides[static_cast<std::size_t>((i + 2) % 3)];
    const double alpha = m.angles[static_cast<std::size_t>(i)];
    const double sg = lcs_sign(m.family, i);
    double lhs = 0.0;
    double rhs = 0.0;
    switch (m.family) {
      case LawFamily::Hyp:
        lhs = std::cosh(a);
        rhs = std::cosh(b) * std::cosh(c) + sg * std::cos(alpha) * std::sinh(b) * std::sinh(c);
        break;
      case LawFamily::SpatioNC:
      case LawFamily::SpatioC:
        lhs = std::cos(a);
        rhs = std::cos(b) * std::cos(c) + sg * std::cosh(alpha) * std::sin(b) * std::sin(c);
        break;
      case LawFamily::Tempo:
        lhs = std::cosh(a);
        rhs = std::cosh(b) * std::cosh(c) + sg * std::cosh(alpha) * std::sinh(b) * std::sinh(c);
        break;
    }
    out[static_cast<std::size_t>(i)] = std::abs(lhs - rhs);
  }
  return out;
}

std::array<double, 3> lca_residuals(const TriangleMeasurements& m) {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const double a = m.sides[static_cast<std::size_t>(i)];
    const double alpha = m.angles[static_cast<std::size_t>(i)];
    const double beta = m.angles[static_cast<std::size_t>((i + 1) % 3)];
    const double gamma = m.angles[static_cast<std::size_t>((i + 2) % 3)];
    const double sg = lca_sign(m.family, i);
    double lhs = 0.0;
    double rhs = 0.0;
    switch (m.family) {
      case LawFamily::Hyp:
        lhs = std::cos(alpha);
        rhs = -std::cos(beta) * std::cos(gamma) + std::cosh(a) * std::sin(beta) * std::sin(gamma);
        break;
      case LawFamily::SpatioNC:
      case LawFamily::SpatioC:
        lhs = std::cosh(alpha);
        rhs = std::cosh(beta) * std::cosh(gamma) + sg * std::cos(a) * std::sinh(beta) * std::sinh(gamma);
        break;
      case LawFamily::Tempo:
        lhs = std::cosh(alpha);
        rhs = std::cosh(beta) * std::cosh(gamma) +
              sg * std::cosh(a) * std::sinh(beta) * std::sinh(gamma);
        break;
    }
    out[static_cast<std::size_t>(i)] = std::abs(lhs - rhs);
  }
  return out;
}

std::array<double, 3> sines_ratios(const TriangleMeasurements& m) {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const double s = m.sides[k];
    const double th = m.angle_signs[k] * m.angles[k];
    double denom = 0.0;
    double num = 0.0;
    switch (m.family) {
      case LawFamily::Hyp:
        num = std::sin(th);
        denom = std::sinh(s);
        break;
      case LawFamily::SpatioNC:
        num = std::sinh(th);
        denom = std::sin(s);
        break;
      case LawFamily::SpatioC:
        num = (i == 0 ? -1.0 : 1.0) * std::sinh(th);
        denom = std::sin(s);
        break;
      case LawFamily::Tempo:
        num = (i == 0 ? -1.0 : 1.0) * std::sinh(th);
        denom = std::sinh(s);
        break;
    }
    if (denom == 0.0) throw Error(ErrorCode::DegenerateTriangle, "zero side in law of sines");
    out[k] = num / denom;
  }
  return out;
}

double sines_residual(const std::array<double, 3>& r) {
  return std::max({std::abs(r[0] - r[1]), std::abs(r[1] - r[2]), std::abs(r[0] - r[2])});
}

double angle_sum_check(const TriangleMeasurements& m) {
  if (m.family != LawFamily::Hyp)
    throw Error(ErrorCode::UnsupportedFamily, "angle sum is only bounded for hyperbolic triangles");
  return m.angles[0] + m.angles[1] + m.angles[2];
}

double side_sum_check(const TriangleMeasurements& m) {
  if (m.family != LawFamily::SpatioNC && m.family != LawFamily::SpatioC)
    throw Error(ErrorCode::UnsupportedFamily, "side sum is only bounded for spatiolateral triangles");
  return m.sides[0] + m.sides[1] + m.sides[2];
}

double TrigReport::max_residual() const {
  double r = sines_residual;
  for (double x : lcs_residuals) r = std::max(r, x);
  for (double x : lca_residuals) r = std::max(r, x);
  return r;
}

TrigReport evaluate(const Triangle& t, const Tolerances& tol) {
  TrigReport out;
  out.measurements = measure(t, tol);
  const TriangleMeasurements& m = out.measurements;
  out.lcs_residuals = lcs_residuals(m);
  out.lca_residuals = lca_residuals(m);
  out.sines_ratios = sines_ratios(m);
  out.sines_residual = sines_residual(out.sines_ratios);
  if (m.family == LawFamily::Hyp) out.angle_sum = angle_sum_check(m);
  if (m.family == LawFamily::SpatioNC || m.family == LawFamily::SpatioC)
    out.side_sum = side_sum_check(m);
  return out;
}

}  // namespace minktrig
