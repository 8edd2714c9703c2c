#include "minktrig/samplers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "minktrig/error.hpp"

namespace minktrig {

namespace {

struct FamilyName {
  SampleFamily family;
  std::string_view name;
};

constexpr std::array<FamilyName, 17> kFamilyNames{{
    {SampleFamily::Hyperbolic, "hyperbolic"},
    {SampleFamily::AntipodalHyperbolic, "antipodal_hyperbolic"},
    {SampleFamily::SpatiolateralContractible, "spatiolateral_contractible"},
    {SampleFamily::SpatiolateralNonContractible, "spatiolateral_noncontractible"},
    {SampleFamily::Chorosceles, "chorosceles"},
    {SampleFamily::Tempolateral, "tempolateral"},
    {SampleFamily::Chronosceles, "chronosceles"},
    {SampleFamily::Lucilateral, "lucilateral"},
    {SampleFamily::BimetricalChorosceles, "bimetrical_chorosceles"},
    {SampleFamily::PhotoscelesSpacelikeBase, "photosceles_spacelike_base"},
    {SampleFamily::BimetricalChronosceles, "bimetrical_chronosceles"},
    {SampleFamily::PhotoscelesTimelikeBase, "photosceles_timelike_base"},
    {SampleFamily::Multiple, "multiple"},
    {SampleFamily::Impossible, "impossible"},
    {SampleFamily::StrangeImproper, "strange_improper"},
    {SampleFamily::StrangeDeSitter, "strange_de_sitter"},
    {SampleFamily::Mixed, "mixed"},
}};

}  // namespace

std::string_view to_string(SampleFamily f) noexcept {
  for (const auto& [family, name] : kFamilyNames)
    if (family == f) return name;
  return "unknown";
}

std::optional<SampleFamily> parse_sample_family(std::string_view name) {
  for (const auto& [family, n] : kFamilyNames)
    if (n == name) return family;
  return std::nullopt;
}

const std::vector<SampleFamily>& all_sample_families() {
  static const std::vector<SampleFamily> families = [] {
    std::vector<SampleFamily> v;
    for (const auto& [family, name] : kFamilyNames)
      if (family != SampleFamily::Mixed) v.push_back(family);
    return v;
  }();
  return families;
}

bool family_matches(SampleFamily f, const TriangleClass& c) {
  const auto kind_is = [&](ProperKind k) { return c.proper_kind == k; };
  const bool has_de_sitter =
      std::find(c.components.begin(), c.components.end(), Component::DeSitter) != c.components.end();
  switch (f) {
    case SampleFamily::Hyperbolic: return c.family == Family::Hyperbolic;
    case SampleFamily::AntipodalHyperbolic: return c.family == Family::AntipodalHyperbolic;
    case SampleFamily::SpatiolateralContractible: return kind_is(ProperKind::SpatiolateralContractible);
    case SampleFamily::SpatiolateralNonContractible:
      return kind_is(ProperKind::SpatiolateralNonContractible);
    case SampleFamily::Chorosceles: return kind_is(ProperKind::Chorosceles);
    case SampleFamily::Tempolateral: return kind_is(ProperKind::Tempolateral);
    case SampleFamily::Chronosceles: return kind_is(ProperKind::Chronosceles);
    case SampleFamily::Lucilateral: return kind_is(ProperKind::Lucilateral);
    case SampleFamily::BimetricalChorosceles: return kind_is(ProperKind::BimetricalChorosceles);
    case SampleFamily::PhotoscelesSpacelikeBase: return kind_is(ProperKind::PhotoscelesSpacelikeBase);
    case SampleFamily::BimetricalChronosceles: return kind_is(ProperKind::BimetricalChronosceles);
    case SampleFamily::PhotoscelesTimelikeBase: return kind_is(ProperKind::PhotoscelesTimelikeBase);
    case SampleFamily::Multiple: return kind_is(ProperKind::Multiple);
    case SampleFamily::Impossible: return c.family == Family::Proper && c.is_impossible();
    case SampleFamily::StrangeImproper: return c.family == Family::Strange && !has_de_sitter;
    case SampleFamily::StrangeDeSitter: return c.family == Family::Strange && has_de_sitter;
    case SampleFamily::Mixed: return true;
  }
  return false;
}

MVec3 hyperbolic_point(double u, double theta) {
  return {std::cosh(u), std::sinh(u) * std::cos(theta), std::sinh(u) * std::sin(theta)};
}

MVec3 de_sitter_point(double v, double theta) {
  return {std::sinh(v), std::cosh(v) * std::cos(theta), std::cosh(v) * std::sin(theta)};
}

SurfacePoint sample_point(Component c, std::mt19937_64& rng, double max_rapidity) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  switch (c) {
    case Component::H2:
    case Component::NegH2: {
      std::uniform_real_distribution<double> u(0.0, max_rapidity);
      const MVec3 x = hyperbolic_point(u(rng), angle(rng));
      return surface_point(c == Component::H2 ? x : -x);
    }
    case Component::DeSitter: {
      std::uniform_real_distribution<double> v(-max_rapidity, max_rapidity);
      return surface_point(de_sitter_point(v(rng), angle(rng)));
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown component");
}

namespace {

/// Future unit timelike T and unit spacelike S tangent to S11 at a.
struct TangentFrame {
  MVec3 t;
  MVec3 s;
};

TangentFrame tangent_frame(const MVec3& a) {
  const MVec3 t = normalize(e1 - minkowski_product(e1, a) * a);
  const MVec3 s = normalize(j_transform(cross(a, t)));
  return {t, s};
}

class Generator {
 public:
  Generator(const SampleSpec& spec) : spec_(spec), rng_(spec.seed) {}

  /// One candidate for the family; may not belong to it.
  std::optional<Triangle> candidate(SampleFamily f) {
    switch (f) {
      case SampleFamily::Hyperbolic:
        return from_components(Component::H2, Component::H2, Component::H2);
      case SampleFamily::AntipodalHyperbolic:
        return from_components(Component::NegH2, Component::NegH2, Component::NegH2);
      case SampleFamily::SpatiolateralContractible:
      case SampleFamily::SpatiolateralNonContractible:
        return vertex_star(false, false);
      case SampleFamily::Chorosceles:
      case SampleFamily::Chronosceles:
      case SampleFamily::Impossible:
        return vertex_star(coin(), coin());
      case SampleFamily::Tempolateral:
        return vertex_star(true, true);
      case SampleFamily::Lucilateral:
      case SampleFamily::PhotoscelesSpacelikeBase:
      case SampleFamily::PhotoscelesTimelikeBase:
        return lightlike_pair(f);
      case SampleFamily::BimetricalChorosceles:
      case SampleFamily::BimetricalChronosceles:
      case SampleFamily::Multiple:
        return lightlike_leg(f);
      case SampleFamily::StrangeImproper: {
        const Component c0 = coin() ? Component::H2 : Component::NegH2;
        const Component c1 = c0 == Component::H2 ? Component::NegH2 : Component::H2;
        return from_components(c0, c1, coin() ? c0 : c1);
      }
      case SampleFamily::StrangeDeSitter:
        return from_components(Component::DeSitter, any_component(),
                               coin() ? Component::H2 : Component::NegH2);
      case SampleFamily::Mixed: break;
    }
    return std::nullopt;
  }

  std::array<int, 3> random_permutation() {
    std::array<int, 3> p{0, 1, 2};
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

  SampleFamily random_family() {
    const auto& all = all_sample_families();
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng_)];
  }

 private:
  bool coin() { return std::bernoulli_distribution(0.5)(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double position() { return spec_.max_rapidity; }
  /// Bound for intrinsic quantities (leg lengths, boost angles).
  double intrinsic() { return 0.5 * spec_.max_rapidity; }

  Component any_component() {
    switch (std::uniform_int_distribution<int>(0, 2)(rng_)) {
      case 0: return Component::H2;
      case 1: return Component::NegH2;
      default: return Component::DeSitter;
    }
  }

  MVec3 de_sitter_base() {
    return de_sitter_point(uniform(-position(), position()), uniform(0.0, 2.0 * std::numbers::pi));
  }

  /// Hyperbolic-sheet points stay within intrinsic() of e1 so that sides are
  /// at most 2 * intrinsic() and cosh of a side stays O(10).
  std::optional<Triangle> from_components(Component a, Component b, Component c) {
    const auto draw = [&](Component x) {
      return sample_point(x, rng_, x == Component::DeSitter ? position() : intrinsic());
    };
    return Triangle::make(draw(a), draw(b), draw(c));
  }

  /// Geodesic from a along a timelike (past or future) or spacelike unit
  /// tangent direction.
  MVec3 leg(const MVec3& a, const TangentFrame& f, bool timelike) {
    const double phi = uniform(-intrinsic(), intrinsic());
    if (timelike) {
      const double sign = coin() ? 1.0 : -1.0;
      const MVec3 x = sign * (std::cosh(phi) * f.t + std::sinh(phi) * f.s);
      const double len = uniform(0.05, intrinsic());
      return std::cosh(len) * a + std::sinh(len) * x;
    }
    const double sign = coin() ? 1.0 : -1.0;
    const MVec3 x = sign * (std::cosh(phi) * f.s + std::sinh(phi) * f.t);
    const double len = uniform(0.05, std::numbers::pi - 0.05);
    return std::cos(len) * a + std::sin(len) * x;
  }

  /// A at random, B and C reached from A along geodesics of the given kinds.
  std::optional<Triangle> vertex_star(bool b_timelike, bool c_timelike) {
    const MVec3 a = de_sitter_base();
    const TangentFrame f = tangent_frame(a);
    return Triangle::from_coords(a, leg(a, f, b_timelike), leg(a, f, c_timelike));
  }

  double lightlike_parameter() {
    return (coin() ? 1.0 : -1.0) * uniform(0.1, intrinsic());
  }

  /// Triangles with two lightlike sides through A.
  std::optional<Triangle> lightlike_pair(SampleFamily f) {
    const MVec3 a = de_sitter_base();
    const TangentFrame fr = tangent_frame(a);
    const MVec3 l1 = fr.t + fr.s;
    const MVec3 l2 = fr.t - fr.s;
    double s = lightlike_parameter();
    double t = lightlike_parameter();
    if (f == SampleFamily::Lucilateral) return Triangle::from_coords(a, a + s * l1, a + t * l1);
    // <<A + s L1, A + t L2>> = 1 - 2st: a spacelike base needs 0 < st < 1,
    // a timelike base st < 0.
    if (f == SampleFamily::PhotoscelesSpacelikeBase) {
      t = std::copysign(uniform(0.05, 0.95) / std::abs(s), s);
    } else if (s * t > 0.0) {
      t = -t;
    }
    return Triangle::from_coords(a, a + s * l1, a + t * l2);
  }

  /// A lightlike side AB plus a third vertex from a geodesic through A.
  std::optional<Triangle> lightlike_leg(SampleFamily f) {
    const MVec3 a = de_sitter_base();
    const TangentFrame fr = tangent_frame(a);
    const MVec3 l = coin() ? fr.t + fr.s : fr.t - fr.s;
    const bool timelike = f == SampleFamily::BimetricalChronosceles ||
                          (f == SampleFamily::Multiple && coin());
    return Triangle::from_coords(a, a + lightlike_parameter() * l, leg(a, fr, timelike));
  }

  const SampleSpec& spec_;
  std::mt19937_64 rng_;
};

bool has_lightlike_side(SampleFamily f) {
  switch (f) {
    case SampleFamily::Lucilateral:
    case SampleFamily::BimetricalChorosceles:
    case SampleFamily::PhotoscelesSpacelikeBase:
    case SampleFamily::BimetricalChronosceles:
    case SampleFamily::PhotoscelesTimelikeBase:
    case SampleFamily::Multiple: return true;
    default: return false;
  }
}

/// Rejects triangles too close to a classification boundary for the
/// residual bounds to be meaningful.
bool well_conditioned(const Triangle& t, const TriangleClass& c, SampleFamily f,
                      const SampleSpec& spec) {
  if (f != SampleFamily::Lucilateral) {
    const MVec3& a = t.A().coords();
    const MVec3& b = t.B().coords();
    const MVec3& cc = t.C().coords();
    const double scale = euclidean_norm(a) * euclidean_norm(b) * euclidean_norm(cc);
    if (std::abs(det3(a, b, cc)) < spec.min_conditioning * scale) return false;
  }
  if (has_lightlike_side(f)) return true;
  // Keep every same-component pair away from |<<p,q>>| = 1, where sides
  // change type or shrink to zero.
  for (int i = 0; i < 3; ++i) {
    const SurfacePoint& p = t.side_start(i);
    const SurfacePoint& q = t.side_end(i);
    if (c.sides[static_cast<std::size_t>(i)].strange) continue;
    const double g = minkowski_product(p.coords(), q.coords());
    if (std::abs(std::abs(g) - 1.0) < 1e-3) return false;
  }
  return true;
}

}  // namespace

SampleBatch sample_triangles(const SampleSpec& spec) {
  if (spec.count < 1) throw Error(ErrorCode::InvalidArgument, "count must be at least 1");
  Generator gen(spec);
  SampleBatch out;
  out.triangles.reserve(static_cast<std::size_t>(spec.count));
  while (static_cast<int>(out.triangles.size()) < spec.count) {
    const SampleFamily f = spec.family == SampleFamily::Mixed ? gen.random_family() : spec.family;
    bool accepted = false;
    while (!accepted) {
      if (out.attempts >= spec.rejection_budget) {
        std::ostringstream msg;
        msg << "family " << to_string(spec.family) << ": " << out.triangles.size() << " of "
            << spec.count << " after " << out.attempts << " draws (acceptance rate "
            << out.acceptance_rate() << ")";
        throw Error(ErrorCode::RejectionBudgetExhausted, msg.str());
      }
      ++out.attempts;
      try {
        std::optional<Triangle> t = gen.candidate(f);
        if (!t) continue;
        const TriangleClass c = classify_triangle(*t);
        if (!family_matches(f, c) || !well_conditioned(*t, c, f, spec)) continue;
        out.triangles.push_back(t->permuted(gen.random_permutation()));
        accepted = true;
      } catch (const Error&) {
        // Numerically borderline candidate (e.g. coincident vertices); draw again.
      }
    }
  }
  return out;
}

double arc_length_oracle(const SurfacePoint& a, const SurfacePoint& b, int steps,
                         const Tolerances& tol) {
  if (steps < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 Simpson steps");
  const GeodesicSegment seg(a, b, tol);
  if (seg.kind() == SegmentKind::DeSitterLightlike)
    throw Error(ErrorCode::LightlikeSegment, "lightlike segments have length 0 by definition");
  if (seg.kind() == SegmentKind::Point) return 0.0;
  const int n = steps + steps % 2;
  const double end = seg.end();
  const double h = end / n;
  // Speed from a second-order finite difference, one-sided at the ends.
  const double fd = 1e-5 * end;
  const auto speed = [&](double t) {
    MVec3 d;
    if (t - fd < 0.0) {
      d = (-3.0 * seg.at(t) + 4.0 * seg.at(t + fd) - seg.at(t + 2 * fd)) / (2.0 * fd);
    } else if (t + fd > end) {
      d = (3.0 * seg.at(t) - 4.0 * seg.at(t - fd) + seg.at(t - 2 * fd)) / (2.0 * fd);
    } else {
      d = (seg.at(t + fd) - seg.at(t - fd)) / (2.0 * fd);
    }
    return minkowski_norm(d);
  };
  double sum = speed(0.0) + speed(end);
  for (int k = 1; k < n; ++k) sum += (k % 2 == 1 ? 4.0 : 2.0) * speed(k * h);
  return sum * h / 3.0;
}

}  // namespace minktrig
