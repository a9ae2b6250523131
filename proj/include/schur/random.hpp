#pragma once

// Seeded generators for randomized fixtures. Same seed, same values.

#include <cstdint>
#include <random>

#include "schur/cmatrix.hpp"

namespace schur {

using Rng = std::mt19937_64;

cplx random_complex(Rng& rng);
/// Uniform on the unit sphere of C^m.
CVector random_unit(std::size_t m, Rng& rng);
CMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);
/// B B* + shift I with B Gaussian.
CMatrix random_pd(std::size_t n, Rng& rng, double shift = 0.5);
/// Upper triangular with diagonal modulus in [0.5, 1.5]; entries strictly
/// above the diagonal vanish with probability zero_prob.
CMatrix random_upper(std::size_t n, Rng& rng, double zero_prob = 0.0);

}  // namespace schur
