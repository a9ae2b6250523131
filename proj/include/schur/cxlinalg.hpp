#pragma once

#include <cstddef>
#include <vector>

#include "schur/cmatrix.hpp"
#include "schur/tolerances.hpp"

namespace schur {

struct HermitianCheck {
  bool hermitian = false;
  double max_asymmetry = 0.0;
  /// 0-based location of the largest |H(i,j) - conj(H(j,i))|.
  std::size_t row = 0;
  std::size_t col = 0;
};

HermitianCheck check_hermitian(const CMatrix& h, double tol = kDefaultTolerances.linalg);

/// Throws NotHermitian with the worst entry named. Also rejects non-square
/// and non-finite input.
void require_hermitian(const CMatrix& h, double tol = kDefaultTolerances.linalg);

/// Upper triangular A with positive real diagonal and A A* = H.
///
/// Computed as J L J where L is the lower Cholesky factor of J H J and J is
/// the index flip. A pivot at or below pd_tol * max|H| raises
/// NotPositiveDefinite naming the (1-based) failing index of H.
CMatrix upper_cholesky(const CMatrix& h, double pd_tol = kDefaultTolerances.pd,
                       double herm_tol = kDefaultTolerances.linalg);

bool is_upper_triangular(const CMatrix& a, double zero_tol = 0.0);

/// LU with partial pivoting.
cplx det(const CMatrix& a);

/// Ryser's inclusion-exclusion formula with Gray-code updates; n <= 10.
cplx permanent(const CMatrix& k);
/// Sum over all n! permutations; n <= 8.
cplx permanent_direct(const CMatrix& k);

struct EigenDecomposition {
  /// Ascending.
  std::vector<double> values;
  /// Column k is the unit eigenvector for values[k]. Each column is scaled
  /// so its largest-modulus entry is real and positive.
  CMatrix vectors;
  int sweeps = 0;

  CVector column(std::size_t k) const {
    CVector v(vectors.rows());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = vectors(i, k);
    return v;
  }
};

/// Cyclic complex Jacobi. Stops when the off-diagonal Frobenius norm drops
/// to 1e-12 * ||H||_F or after 50 sweeps.
EigenDecomposition herm_eig(const CMatrix& h, double herm_tol = kDefaultTolerances.linalg);

/// A(p|p): row and column p removed (0-based p).
CMatrix delete_rc(const CMatrix& a, std::size_t p);

/// A B*. ab_star(A, A) is the Gram matrix of the rows of A.
CMatrix ab_star(const CMatrix& a, const CMatrix& b);

}  // namespace schur
