#include "minktrig/triangles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "minktrig/error.hpp"

namespace minktrig {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Hyperbolic: return "hyperbolic";
    case Family::AntipodalHyperbolic: return "antipodal_hyperbolic";
    case Family::Proper: return "proper";
    case Family::Strange: return "strange";
  }
  return "unknown";
}

std::string_view to_string(ProperKind k) noexcept {
  switch (k) {
    case ProperKind::SpatiolateralContractible: return "spatiolateral_contractible";
    case ProperKind::SpatiolateralNonContractible: return "spatiolateral_noncontractible";
    case ProperKind::Chorosceles: return "chorosceles";
    case ProperKind::Tempolateral: return "tempolateral";
    case ProperKind::Chronosceles: return "chronosceles";
    case ProperKind::Lucilateral: return "lucilateral";
    case ProperKind::BimetricalChorosceles: return "bimetrical_chorosceles";
    case ProperKind::PhotoscelesSpacelikeBase: return "photosceles_spacelike_base";
    case ProperKind::BimetricalChronosceles: return "bimetrical_chronosceles";
    case ProperKind::PhotoscelesTimelikeBase: return "photosceles_timelike_base";
    case ProperKind::Multiple: return "multiple";
  }
  return "unknown";
}

std::string_view to_string(SideLabel s) noexcept {
  switch (s) {
    case SideLabel::a: return "a";
    case SideLabel::b: return "b";
    case SideLabel::c: return "c";
  }
  return "?";
}

Triangle Triangle::make(const SurfacePoint& a, const SurfacePoint& b, const SurfacePoint& c,
                        const Tolerances& tol) {
  if (same_point(a, b, tol) || same_point(b, c, tol) || same_point(a, c, tol))
    throw Error(ErrorCode::DuplicateVertices, "triangle vertices must be pairwise distinct");
  return Triangle({a, b, c});
}

Triangle Triangle::from_coords(const MVec3& a, const MVec3& b, const MVec3& c,
                               const Tolerances& tol) {
  return make(surface_point(a, tol), surface_point(b, tol), surface_point(c, tol), tol);
}

Triangle Triangle::permuted(const std::array<int, 3>& perm) const {
  return Triangle({vertex(perm[0]), vertex(perm[1]), vertex(perm[2])});
}

Triangle Triangle::transformed(const Mat3& m, const Tolerances& tol) const {
  return make(transform(m, A(), tol), transform(m, B(), tol), transform(m, C(), tol), tol);
}

int TriangleClass::count(SegmentKind k) const {
  return static_cast<int>(
      std::count_if(sides.begin(), sides.end(), [k](const SideReport& s) { return s.kind == k; }));
}

bool is_degenerate(const Triangle& t, const Tolerances& tol) {
  const MVec3& a = t.A().coords();
  const MVec3& b = t.B().coords();
  const MVec3& c = t.C().coords();
  const double scale = euclidean_norm(a) * euclidean_norm(b) * euclidean_norm(c);
  return std::abs(det3(a, b, c)) <= tol.degen * scale;
}

namespace {

bool all_spacelike_sides(const Triangle& t, const Tolerances& tol) {
  for (int i = 0; i < 3; ++i) {
    if (segment_kind(t.side_start(i), t.side_end(i), tol) != SegmentKind::DeSitterSpacelike)
      return false;
  }
  return true;
}

double projected_angle(const MVec3& x) { return std::atan2(x.x3, x.x2); }

double wrap_pi(double d) {
  constexpr double pi = std::numbers::pi;
  while (d > pi) d -= 2.0 * pi;
  while (d < -pi) d += 2.0 * pi;
  return d;
}

/// Total signed turning of the projected segment p -> q.
double side_turning(const SurfacePoint& p, const SurfacePoint& q, const Tolerances& tol) {
  // Spacelike segment: cos(t) p + sin(t) X on [0, d].
  const double end = segment_parameter_end(p, q, tol);
  const MVec3 x_pq = tangent_vector(p, q, tol);
  for (int n = 256;; n *= 2) {
    double total = 0.0;
    double max_step = 0.0;
    double prev = projected_angle(p.coords());
    for (int k = 1; k <= n; ++k) {
      const double s = end * k / n;
      const MVec3 x = k == n ? q.coords() : std::cos(s) * p.coords() + std::sin(s) * x_pq;
      const double cur = projected_angle(x);
      const double d = wrap_pi(cur - prev);
      max_step = std::max(max_step, std::abs(d));
      total += d;
      prev = cur;
    }
    if (max_step <= std::numbers::pi / 2 || n >= (1 << 16)) return total;
  }
}

}  // namespace

int winding_number(const Triangle& t, const Tolerances& tol) {
  if (!all_spacelike_sides(t, tol))
    throw Error(ErrorCode::NotSpatiolateral, "winding number needs three spacelike sides");
  double total = 0.0;
  for (int i = 0; i < 3; ++i) total += side_turning(t.side_start(i), t.side_end(i), tol);
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

bool is_contractible(const Triangle& t, const Tolerances& tol) {
  return winding_number(t, tol) == 0;
}

bool projected_vertices_in_half_plane(const Triangle& t) noexcept {
  // Sort the projected directions; they fit in an open half-plane iff some
  // gap between consecutive directions exceeds pi.
  std::array<double, 3> ang{};
  for (int i = 0; i < 3; ++i) ang[static_cast<std::size_t>(i)] = projected_angle(t.vertex(i).coords());
  std::sort(ang.begin(), ang.end());
  const double gaps[] = {ang[1] - ang[0], ang[2] - ang[1], ang[0] + 2.0 * std::numbers::pi - ang[2]};
  return std::any_of(std::begin(gaps), std::end(gaps),
                     [](double g) { return g > std::numbers::pi; });
}

std::vector<int> opposite_sign_vertices(const Triangle& t, const Tolerances& tol) {
  std::vector<int> out;
  for (int i = 0; i < 3; ++i) {
    const SurfacePoint& a = t.vertex(i);
    const MVec3 xb = tangent_vector(a, t.vertex((i + 1) % 3), tol);
    const MVec3 xc = tangent_vector(a, t.vertex((i + 2) % 3), tol);
    for (const MVec3& x : {xb, xc}) {
      if (std::abs(x.x1) <= tol.light * std::max(1.0, euclidean_norm(x)))
        throw Error(ErrorCode::DegenerateTriangle,
                    "tangent vector has vanishing time component");
    }
    if ((xb.x1 > 0.0) != (xc.x1 > 0.0)) out.push_back(i);
  }
  return out;
}

namespace {

bool near_band_edge(double margin) { return margin >= 0.1 && margin < 10.0; }

std::optional<ProperKind> proper_kind_from_counts(int s, int tl, int l) {
  if (s == 3) return std::nullopt;  // split by contractibility
  if (s == 2 && tl == 1) return ProperKind::Chorosceles;
  if (tl == 3) return ProperKind::Tempolateral;
  if (tl == 2 && s == 1) return ProperKind::Chronosceles;
  if (l == 3) return ProperKind::Lucilateral;
  if (s == 2 && l == 1) return ProperKind::BimetricalChorosceles;
  if (l == 2 && s == 1) return ProperKind::PhotoscelesSpacelikeBase;
  if (tl == 2 && l == 1) return ProperKind::BimetricalChronosceles;
  if (l == 2 && tl == 1) return ProperKind::PhotoscelesTimelikeBase;
  return ProperKind::Multiple;
}

}  // namespace

TriangleClass classify_triangle(const Triangle& t, const Tolerances& tol) {
  TriangleClass out;
  for (int i = 0; i < 3; ++i) out.components[static_cast<std::size_t>(i)] = t.vertex(i).component();

  const auto all = [&](Component c) {
    return std::all_of(out.components.begin(), out.components.end(),
                       [c](Component x) { return x == c; });
  };
  if (all(Component::H2)) {
    out.family = Family::Hyperbolic;
  } else if (all(Component::NegH2)) {
    out.family = Family::AntipodalHyperbolic;
  } else if (all(Component::DeSitter)) {
    out.family = Family::Proper;
  } else {
    out.family = Family::Strange;
  }

  for (int i = 0; i < 3; ++i) {
    const SurfacePoint& p = t.side_start(i);
    const SurfacePoint& q = t.side_end(i);
    SideReport& side = out.sides[static_cast<std::size_t>(i)];
    side.label = static_cast<SideLabel>(i);
    side.kind = segment_kind(p, q, tol);
    side.length = distance(p, q, tol);
    side.strange = p.component() != q.component();
    if (antipodal(p, q, tol)) {
      out.opposite_vertices = true;
    } else {
      side.plane = classify_plane(p.coords(), q.coords(), tol);
      side.close_call = near_band_edge(classification_margin(cross(p.coords(), q.coords()), tol));
    }
    if (!side.strange && p.component() == Component::DeSitter)
      side.close_call =
          side.close_call || near_band_edge(classification_margin(p.coords() - q.coords(), tol));
    if (side.kind == SegmentKind::Empty && !side.strange) out.impossible_sides.push_back(side.label);
  }
  out.degenerate = is_degenerate(t, tol);

  if (out.family == Family::Proper && out.impossible_sides.empty()) {
    const int s = out.count(SegmentKind::DeSitterSpacelike);
    const int tl = out.count(SegmentKind::DeSitterTimelike);
    const int l = out.count(SegmentKind::DeSitterLightlike);
    out.proper_kind = proper_kind_from_counts(s, tl, l);
    if (!out.proper_kind) {
      out.proper_kind = is_contractible(t, tol) ? ProperKind::SpatiolateralContractible
                                                : ProperKind::SpatiolateralNonContractible;
    }
  }
  return out;
}

namespace {

bool inequality_holds(const std::array<ExtDistance, 3>& d) {
  for (int i = 0; i < 3; ++i) {
    const ExtDistance lhs = d[static_cast<std::size_t>((i + 1) % 3)] + d[static_cast<std::size_t>((i + 2) % 3)];
    const ExtDistance rhs = d[static_cast<std::size_t>(i)];
    if (rhs.is_infinite()) {
      if (!lhs.is_infinite()) return false;
      continue;
    }
    if (lhs.is_infinite()) continue;
    // Equality cases (degenerate triangles) must survive rounding.
    if (lhs.value() < rhs.value() - 1e-9 * std::max(1.0, rhs.value())) return false;
  }
  return true;
}

std::optional<bool> predicted_inequality(const TriangleClass& cls,
                                         const std::array<ExtDistance, 3>& d) {
  const auto infinite = std::count_if(d.begin(), d.end(), [](ExtDistance x) { return x.is_infinite(); });
  if (infinite == 1) return false;
  if (infinite >= 2) return true;
  switch (cls.family) {
    case Family::Hyperbolic:
    case Family::AntipodalHyperbolic: return true;
    case Family::Strange: return std::nullopt;
    case Family::Proper: break;
  }
  if (!cls.proper_kind) return std::nullopt;
  if (cls.degenerate) return true;
  switch (*cls.proper_kind) {
    case ProperKind::SpatiolateralNonContractible:
    case ProperKind::Lucilateral: return true;
    case ProperKind::SpatiolateralContractible:
    case ProperKind::Tempolateral:
    case ProperKind::PhotoscelesSpacelikeBase:
    case ProperKind::PhotoscelesTimelikeBase: return false;
    case ProperKind::BimetricalChorosceles:
    case ProperKind::BimetricalChronosceles: {
      // Satisfied exactly when the two non-lightlike sides are equal.
      std::vector<double> measured;
      for (const SideReport& s : cls.sides)
        if (s.kind != SegmentKind::DeSitterLightlike) measured.push_back(s.length.value());
      if (measured.size() != 2) return std::nullopt;
      return std::abs(measured[0] - measured[1]) <= 1e-9 * std::max(1.0, measured[0]);
    }
    case ProperKind::Chorosceles:
    case ProperKind::Chronosceles:
    case ProperKind::Multiple: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

InequalityReport triangle_inequality_report(const Triangle& t, const Tolerances& tol) {
  const TriangleClass cls = classify_triangle(t, tol);
  InequalityReport out;
  for (int i = 0; i < 3; ++i)
    out.lengths[static_cast<std::size_t>(i)] = cls.sides[static_cast<std::size_t>(i)].length;
  out.holds = inequality_holds(out.lengths);
  out.predicted = predicted_inequality(cls, out.lengths);
  return out;
}

}  // namespace minktrig
