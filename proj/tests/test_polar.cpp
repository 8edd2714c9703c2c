#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "minktrig/error.hpp"
#include "minktrig/polar.hpp"
#include "minktrig/samplers.hpp"

using namespace minktrig;
using namespace fixture;

namespace {

const double kPi = std::numbers::pi;

std::vector<Triangle> sample(SampleFamily f, int n, std::uint64_t seed) {
  SampleSpec spec;
  spec.family = f;
  spec.count = n;
  spec.seed = seed;
  return sample_triangles(spec).triangles;
}

double max_deviation(const std::array<MVec3, 3>& x, const Triangle& t) {
  double d = 0;
  for (int i = 0; i < 3; ++i) d = std::max(d, euclidean_norm(x[i] - t.vertex(i).coords()));
  return d;
}

bool has(const PolarPrediction& p, PolarOutcome o) {
  return std::find(p.outcomes.begin(), p.outcomes.end(), o) != p.outcomes.end();
}

/// Photosceles with a spacelike base: apex e2, legs along e2 + t(e1 +- e3).
Triangle photosceles() { return tri(e2, {0.5, 1, 0.5}, {0.5, 1, -0.5}); }

}  // namespace

TEST(PolarExists, Examples) {
  const PolarExistence opp = polar_exists(tri(e2, -e2, e3));
  EXPECT_FALSE(opp.exists);
  EXPECT_EQ(opp.reason, NonExistenceReason::OppositeVertices);
  EXPECT_EQ(opp.side, SideLabel::c);

  const PolarExistence ph = polar_exists(photosceles());
  EXPECT_FALSE(ph);
  EXPECT_EQ(ph.reason, NonExistenceReason::LightlikeSidePlane);
  EXPECT_EQ(classify_triangle(photosceles()).proper_kind, ProperKind::PhotoscelesSpacelikeBase);

  EXPECT_TRUE(polar_exists(hyperbolic()));
  EXPECT_TRUE(polar_exists(spatio_contractible()));
}

TEST(PolarExists, EquivalentToCrossProductTest) {
  SampleSpec spec;
  spec.family = SampleFamily::Mixed;
  spec.count = 2000;
  spec.seed = 21;
  for (const Triangle& t : sample_triangles(spec).triangles) {
    bool by_cross = true;
    for (int i = 0; i < 3; ++i) {
      const MVec3 x = cross(t.side_start(i).coords(), t.side_end(i).coords());
      if (euclidean_norm(x) <= 1e-12 || classify_vector(x) == CausalClass::Lightlike) by_cross = false;
    }
    EXPECT_EQ(polar_exists(t).exists, by_cross);
  }
}

TEST(PolarExists, NonExistentKinds) {
  for (SampleFamily f : {SampleFamily::Lucilateral, SampleFamily::PhotoscelesSpacelikeBase,
                         SampleFamily::PhotoscelesTimelikeBase, SampleFamily::BimetricalChorosceles,
                         SampleFamily::BimetricalChronosceles, SampleFamily::Multiple}) {
    for (const Triangle& t : sample(f, 100, 22)) {
      EXPECT_FALSE(polar_exists(t)) << to_string(f);
      EXPECT_TRUE(predict_polar_type(classify_triangle(t)).is_nonexistent());
    }
  }
}

TEST(PolarTriangle, HyperbolicFixture) {
  const PolarResult p = polar_triangle(hyperbolic());
  EXPECT_EQ(p.status, PolarStatus::Triangle);
  EXPECT_EQ(p.epsilon, 1);
  EXPECT_NEAR(det3(hyperbolic().A().coords(), hyperbolic().B().coords(), hyperbolic().C().coords()),
              2 * kSqrt2, 1e-14);
  const MVec3 want = MVec3{1, -kSqrt2, -kSqrt2} / kSqrt3;
  EXPECT_LT(euclidean_norm(p.vertices[2] - want), 1e-14);
  for (const MVec3& v : p.vertices) EXPECT_NEAR(minkowski_product(v, v), 1.0, 1e-12);
  EXPECT_EQ(classify_triangle(p.triangle()).proper_kind, ProperKind::SpatiolateralNonContractible);
}

TEST(PolarTriangle, ZeroTriangleForDegenerate) {
  const PolarResult p = polar_triangle(tri(e2, e3, {0, kSqrt2 / 2, kSqrt2 / 2}));
  EXPECT_EQ(p.status, PolarStatus::ZeroTriangle);
  EXPECT_EQ(p.epsilon, 0);
  for (const MVec3& v : p.vertices) EXPECT_EQ(v, MVec3{});
  try {
    p.triangle();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateTriangle);
  }
}

TEST(PolarTriangle, ThrowsWhenNonExistent) {
  try {
    polar_triangle(tri(e2, -e2, e3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PolarNonExistent);
  }
}

TEST(PolarTriangle, ContractibleFixtureComponents) {
  const PolarResult p = polar_triangle(spatio_contractible());
  EXPECT_EQ(p.epsilon, 1);
  const TriangleClass c = classify_triangle(p.triangle());
  EXPECT_EQ(c.family, Family::Strange);
  EXPECT_EQ(c.components[0], Component::NegH2);
  EXPECT_EQ(c.components[1], Component::NegH2);
  EXPECT_EQ(c.components[2], Component::H2);

  const PolarResult q = polar_triangle(spatio_noncontractible());
  EXPECT_EQ(q.epsilon, -1);
  const TriangleClass d = classify_triangle(q.triangle());
  EXPECT_TRUE(d.family == Family::Hyperbolic || d.family == Family::AntipodalHyperbolic);
}

TEST(PolarTriangle, InvolutionAndEpsilon) {
  const PolarResult p = polar_triangle(hyperbolic());
  const PolarResult pp = polar_triangle(p.triangle());
  EXPECT_LT(max_deviation(pp.vertices, hyperbolic()), 1e-9);
  EXPECT_EQ(pp.epsilon, p.epsilon);

  SampleSpec spec;
  spec.family = SampleFamily::Mixed;
  spec.count = 2000;
  spec.seed = 23;
  int checked = 0;
  for (const Triangle& t : sample_triangles(spec).triangles) {
    if (!polar_exists(t)) continue;
    const PolarResult r = polar_triangle(t);
    if (r.status == PolarStatus::ZeroTriangle) continue;
    const PolarResult rr = polar_triangle(r.triangle());
    EXPECT_LT(max_deviation(rr.vertices, t), 1e-9);
    EXPECT_EQ(rr.epsilon, r.epsilon);
    ++checked;
  }
  EXPECT_GT(checked, 500);
}

TEST(PolarTriangle, VertexOrderIndependence) {
  const std::array<std::array<int, 3>, 5> perms{{{1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};
  for (const Triangle& t : sample(SampleFamily::Tempolateral, 100, 24)) {
    const PolarResult r = polar_triangle(t);
    for (const auto& perm : perms) {
      const PolarResult q = polar_triangle(t.permuted(perm));
      for (int i = 0; i < 3; ++i) EXPECT_LT(euclidean_norm(q.vertices[i] - r.vertices[perm[i]]), 1e-12);
    }
  }
}

TEST(PolarTriangle, DualityForHyperbolic) {
  for (SampleFamily f : {SampleFamily::Hyperbolic, SampleFamily::AntipodalHyperbolic}) {
    for (const Triangle& t : sample(f, 300, 25)) {
      const Triangle p = polar_triangle(t).triangle();
      for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        const double alpha = angle(t.vertex(j), t.vertex(i), t.vertex(k));
        const double side = distance(t.vertex(j), t.vertex(k)).value();
        const double alpha_p = angle(p.vertex(j), p.vertex(i), p.vertex(k));
        const double side_p = distance(p.vertex(j), p.vertex(k)).value();
        EXPECT_NEAR(alpha, kPi - side_p, 1e-9);
        EXPECT_NEAR(side, alpha_p, 1e-9);
      }
    }
  }
}

TEST(PolarTriangle, MinkowskiVariantKeepsMeasurements) {
  for (const Triangle& t : sample(SampleFamily::Hyperbolic, 100, 26)) {
    const PolarResult r = polar_triangle(t);
    const Triangle p = r.triangle();
    const auto mv = minkowski_polar_vertices(r);
    const Triangle q = tri(mv[0], mv[1], mv[2]);
    EXPECT_EQ(classify_triangle(q).proper_kind, classify_triangle(p).proper_kind);
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      EXPECT_NEAR(distance(q.vertex(j), q.vertex(k)).value(), distance(p.vertex(j), p.vertex(k)).value(), 1e-10);
      EXPECT_NEAR(angle(q.vertex(j), q.vertex(i), q.vertex(k)), angle(p.vertex(j), p.vertex(i), p.vertex(k)), 1e-9);
    }
  }
}

TEST(PredictPolarType, Examples) {
  const PolarPrediction h = predict_polar_type(classify_triangle(hyperbolic()));
  ASSERT_EQ(h.outcomes.size(), 1u);
  EXPECT_EQ(h.outcomes[0], PolarOutcome::SpatiolateralNonContractible);
  EXPECT_TRUE(has(predict_polar_type(classify_triangle(spatio_contractible())), PolarOutcome::StrangeImproper));
  EXPECT_TRUE(predict_polar_type(classify_triangle(photosceles())).is_nonexistent());
  EXPECT_EQ(predict_polar_type(classify_triangle(tri(e2, e3, {0, kSqrt2 / 2, kSqrt2 / 2}))).outcomes[0],
            PolarOutcome::ZeroTriangle);
  EXPECT_EQ(predict_polar_type(classify_triangle(spatio_noncontractible())).outcomes[0],
            PolarOutcome::PlusMinusHyperbolic);
  EXPECT_TRUE(has(predict_polar_type(classify_triangle(chrono_fails_1())), PolarOutcome::Strange));
  const PolarPrediction s = predict_polar_type(classify_triangle(tri(e1, e2, e3)));
  EXPECT_EQ(s.outcomes.size(), 4u);
}

TEST(PredictPolarType, TempolateralGivesImpossibleWithOneTimelikeSide) {
  for (const Triangle& t : sample(SampleFamily::Tempolateral, 200, 27)) {
    const PolarCheck c = check_polar_type(t);
    EXPECT_TRUE(c.consistent);
    ASSERT_TRUE(c.polar_class.has_value());
    EXPECT_EQ(c.polar_class->impossible_sides.size(), 2u);
    EXPECT_EQ(c.polar_class->count(SegmentKind::DeSitterTimelike), 1);
  }
}

TEST(PredictPolarType, ConsistentOnEveryFamily) {
  for (SampleFamily f : all_sample_families()) {
    for (const Triangle& t : sample(f, 200, 28)) {
      const PolarCheck c = check_polar_type(t);
      EXPECT_TRUE(c.consistent) << to_string(f);
    }
  }
}
