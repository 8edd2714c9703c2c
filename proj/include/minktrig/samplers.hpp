#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "minktrig/triangles.hpp"

namespace minktrig {

/// Sampling targets: the proper kinds plus the remaining families.
enum class SampleFamily {
  Hyperbolic,
  AntipodalHyperbolic,
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
  /// Proper with at least one empty side.
  Impossible,
  /// Strange, vertices on H2 and -H2 only.
  StrangeImproper,
  /// Strange with at least one de Sitter vertex.
  StrangeDeSitter,
  /// Each triangle drawn from a uniformly chosen family above.
  Mixed,
};

std::string_view to_string(SampleFamily f) noexcept;
std::optional<SampleFamily> parse_sample_family(std::string_view name);
/// All families except Mixed.
const std::vector<SampleFamily>& all_sample_families();

/// Whether a classification belongs to the family.
bool family_matches(SampleFamily f, const TriangleClass& c);

struct SampleSpec {
  SampleFamily family = SampleFamily::Hyperbolic;
  int count = 1;
  std::uint64_t seed = 0;
  /// Bound on the hyperbolic parameters (rapidities, geodesic lengths).
  double max_rapidity = 3.0;
  /// Total candidate draws allowed for the whole batch.
  long rejection_budget = 1'000'000;
  /// Reject candidates with |det(A,B,C)| below this multiple of the norm
  /// product. Ignored for lucilateral triangles, which are always degenerate.
  double min_conditioning = 1e-3;
};

struct SampleBatch {
  std::vector<Triangle> triangles;
  long attempts = 0;
  double acceptance_rate() const {
    return attempts == 0 ? 0.0 : static_cast<double>(triangles.size()) / static_cast<double>(attempts);
  }
};

/// (cosh u, sinh u cos theta, sinh u sin theta).
MVec3 hyperbolic_point(double u, double theta);
/// (sinh v, cosh v cos theta, cosh v sin theta).
MVec3 de_sitter_point(double v, double theta);

/// Point on the requested component with parameters uniform on
/// [0, max_rapidity] (H2), [-max_rapidity, max_rapidity] (S11) and [0, 2pi).
SurfacePoint sample_point(Component c, std::mt19937_64& rng, double max_rapidity = 3.0);

/// Throws RejectionBudgetExhausted (message includes the acceptance rate)
/// or InvalidArgument for count < 1.
SampleBatch sample_triangles(const SampleSpec& spec);

/// Composite Simpson integral of the speed of segment_point over [0, T].
/// Throws EmptySegment, LightlikeSegment.
double arc_length_oracle(const SurfacePoint& a, const SurfacePoint& b, int steps,
                         const Tolerances& tol = kDefaultTolerances);

}  // namespace minktrig
