#pragma once

namespace schur {

/// Every numeric threshold used by the library. Callers may copy and adjust
/// a record; functions take it by const reference with these defaults.
struct Tolerances {
  /// |D(i,j)| > zero * max|D| counts as a nonzero entry.
  double zero = 1e-12;
  /// Reconstruction, unitarity, Hermitian symmetry, cross-route agreement.
  double linalg = 1e-10;
  /// Factorization pivots must exceed pd * max|H|.
  double pd = 1e-10;
  /// Equality verdicts (Schur gap, trace form, sign condition).
  double eq = 1e-8;
  /// Consistency of a representation built from generator images.
  double word = 1e-9;
  /// Relative residual of v - k w in the collinearity test.
  double collinear = 1e-8;
  /// |k| must exceed this for a collinearity factor to count.
  double k_floor = 1e-12;
  /// Agreement of the two routes inside the tensor oracle.
  double oracle = 1e-9;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace schur
