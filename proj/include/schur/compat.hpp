#pragma once

// Compatible permutations: for a function alpha on {1..n}, s is
// alpha-compatible when alpha(s(i)) >= i for every i. Restricting further
// by a matrix A keeps those s with every A(i, alpha(s(i))) nonzero.

#include <optional>
#include <vector>

#include "schur/cmatrix.hpp"
#include "schur/multi_index.hpp"
#include "schur/permgroup.hpp"
#include "schur/tolerances.hpp"

namespace schur {

/// Spike function: r -> c (r < c), identity elsewhere. 0-based.
struct SpikeFunction {
  int r = 0;
  int c = 0;
  MultiIndex as_multi_index(int n) const;
  friend bool operator==(const SpikeFunction&, const SpikeFunction&) = default;
};

inline constexpr int kCompatMaxN = 8;

/// All alpha-compatible permutations in lexicographic order. TooLarge above n = 8.
std::vector<Permutation> compatible(const MultiIndex& alpha);

/// Compatible set of the spike r -> c built from subsets of {r+1..c}: the
/// identity plus one increasing cycle (r, s_1, ..., s_k) per nonempty subset.
std::vector<Permutation> compatible_spike(int n, int r, int c);

std::vector<Permutation> restricted_compatible(const MultiIndex& alpha, const CMatrix& a,
                                               double zero_tol = kDefaultTolerances.zero);

/// Spike at the largest r < c with A(r, c) nonzero, if any. A must be upper triangular.
std::optional<SpikeFunction> max_row_spike(const CMatrix& a, int c, double zero_tol = kDefaultTolerances.zero);

/// gamma in Gamma_{n,p} (gamma(p) = p, gamma(i) != p elsewhere) paired with
/// its relabeled restriction to {0..n-1}\{p}.
struct GammaPair {
  MultiIndex gamma;
  MultiIndex restricted;
};

/// (n-1)^(n-1) pairs, ordered by the code of the restricted function.
std::vector<GammaPair> gamma_np(int n, int p);

}  // namespace schur
