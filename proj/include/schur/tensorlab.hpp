#pragma once

// Brute-force tensor oracle on U (x) (x^n V).
//
// A TensorVector stores m * n^n coefficients against the orthonormal basis
// {b_j (x) e_alpha}. The generalized symmetry operator is
//
//   T_G = sum_{s in G} M(s) (x) P(s),   P(s) e_alpha = e_{alpha o s^-1},
//
// applied as a sum of g terms and never formed as a matrix. A matrix A
// stands for the homogeneous tensor x_1 (x) ... (x) x_n with x_i = row i of A.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "schur/cmatrix.hpp"
#include "schur/genmatfn.hpp"
#include "schur/kernels.hpp"
#include "schur/multi_index.hpp"
#include "schur/permgroup.hpp"
#include "schur/repcat.hpp"
#include "schur/tolerances.hpp"

namespace schur {

/// Default order cap for dense tensors; SCHUR_TENSOR_MAX_N overrides it.
inline constexpr int kTensorMaxN = 6;
inline constexpr std::size_t kTensorMaxM = 8;

/// Current order cap, honoring SCHUR_TENSOR_MAX_N.
int tensor_max_n();

class TensorVector {
 public:
  TensorVector() = default;
  /// Zero tensor; throws TooLarge past the caps.
  TensorVector(std::size_t m, int n);
  TensorVector(std::size_t m, int n, std::vector<cplx> coeffs);

  std::size_t degree() const noexcept { return m_; }
  int order() const noexcept { return n_; }

  cplx& at(std::size_t j, const MultiIndex& alpha) { return coeffs_[alpha.encode() * m_ + j]; }
  cplx at(std::size_t j, const MultiIndex& alpha) const { return coeffs_[alpha.encode() * m_ + j]; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  std::span<cplx> coeffs() noexcept { return coeffs_; }

  double norm() const { return norm2(coeffs_); }

  TensorVector& operator-=(const TensorVector& other);
  TensorVector& operator*=(cplx s);

 private:
  std::size_t m_ = 0;
  int n_ = 0;
  std::vector<cplx> coeffs_;
};

/// T_G(u (x) x_1 (x) ... (x) x_n) with x_i the rows of a.
TensorVector symmetrize(const UnitaryRep& rep, std::span<const cplx> u, const CMatrix& a,
                        kernels::Exec exec = kernels::Exec::parallel);

/// T_G on an arbitrary tensor.
TensorVector apply_symmetry(const UnitaryRep& rep, const TensorVector& v,
                            kernels::Exec exec = kernels::Exec::parallel);

cplx inner(const TensorVector& v, const TensorVector& w);

/// k with T_G(u (x) x) = k T_G(u (x) e), if one exists. a must be upper
/// triangular and nonsingular.
std::optional<cplx> collinearity(const UnitaryRep& rep, std::span<const cplx> u, const CMatrix& a,
                                 const Tolerances& tol = kDefaultTolerances);

struct BasisInner {
  /// Sum over G intersected with the A-restricted alpha-compatible set.
  cplx restricted_sum;
  /// Coefficient of the full symmetrized tensor against u (x) e_alpha.
  cplx coefficient;
};

/// (T_G(u (x) x), u (x) e_alpha) by both routes; InternalError if they differ.
BasisInner basis_inner(const UnitaryRep& rep, std::span<const cplx> u, const CMatrix& a, const MultiIndex& alpha,
                       const Tolerances& tol = kDefaultTolerances);

/// A(p|p), the matrix of the projected tensor x^p. a must be upper triangular.
CMatrix project(const CMatrix& a, int p);

/// max over gamma in Gamma_{n,p} of
///   |(T_G(u (x) x), u (x) e_gamma) - a_pp (T_{G'_p}(u (x) x^p), u (x) e_{gamma'_p})|
/// where G'_p is the stabilizer of p restricted to the remaining points.
/// Column p of a must have no nonzero off the diagonal.
double projection_identity_check(const UnitaryRep& rep, std::span<const cplx> u, const CMatrix& a, int p,
                                 const Tolerances& tol = kDefaultTolerances);

/// The six equivalent equality conditions for H = A A*.
struct EqualityChain {
  /// 0: T_G(u (x) x) = k T_G(u (x) e), k != 0
  /// 1: Cauchy-Schwarz equality for those two tensors
  /// 2: det(H) = (M_H u, u)
  /// 3: |det A|^2 = (M_{AA*} u, u)
  /// 4: support group of H inside G with the sign condition
  /// 5: support group of A inside G with the sign condition
  std::array<bool, 6> conditions{};
  CMatrix a;
  std::optional<cplx> k;
  double cs_lhs = 0.0;  // |(v, w)|^2
  double cs_rhs = 0.0;  // ||v||^2 ||w||^2
  double det_h = 0.0;
  double value = 0.0;   // (M_H u, u)
  double det_a_sq = 0.0;
  double value_aa = 0.0;  // (M_{AA*} u, u)

  bool all_agree() const noexcept;
};

EqualityChain equality_chain_report(const CMatrix& h, const PermGroup& g, const UnitaryRep& rep,
                                    std::span<const cplx> u, const Tolerances& tol = kDefaultTolerances);

}  // namespace schur
