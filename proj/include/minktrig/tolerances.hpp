#pragma once

namespace minktrig {

/// All numerical bands used by the library, in one place. Every operation that
/// compares against a band takes a `const Tolerances&` defaulting to
/// `kDefaultTolerances`, so tests can tighten or loosen them per call.
struct Tolerances {
  /// Causal classification: |<<x,x>>| <= light * max(1, |x|^2) is lightlike.
  double light = 1e-9;
  /// is_lorentz: max |M^T J M - J| entry.
  double mat = 1e-9;
  /// Surface membership: |<<x,x>> -/+ 1| <= surf.
  double surf = 1e-9;
  /// arccos / arcosh arguments this close to the domain boundary are clamped.
  double clamp = 1e-9;
  /// Degenerate triangle: |det(A,B,C)| <= degen * |A||B||C|.
  double degen = 1e-9;
  /// Point identity (A == B, A == -B), relative to max(1, |A|).
  double point = 1e-12;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace minktrig
