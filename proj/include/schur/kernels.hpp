#pragma once

// Hot loops of the library, each in two builds: a plain serial reference
// (kernels_serial.cpp) and an OpenMP version (kernels_omp.cpp). The two
// are compared in tests/test_kernels.cpp and timed in bench/.
//
// Tensor coefficient layout: index code(alpha) * m + j, where
// code(alpha) = sum_i alpha(i) * n^i with 0-based alpha.

#include <cstddef>
#include <span>
#include <vector>

#include "schur/cmatrix.hpp"
#include "schur/repcat.hpp"

namespace schur::kernels {

enum class Exec { serial, parallel };

enum class IndexForm {
  /// prod_i K(i, s(i))
  row_image,
  /// prod_i K(s^-1(i), i)
  column_preimage,
};

/// sum over the listed element indices of M(s) * prod(K along s).
/// Zero factors short-circuit the product.
CMatrix gmf_sum_serial(const CMatrix& k, const UnitaryRep& rep, std::span<const std::size_t> elements,
                       IndexForm form);
/// Elements are split into fixed blocks whose partial sums are added in
/// block order, so the result does not depend on the thread count.
CMatrix gmf_sum_parallel(const CMatrix& k, const UnitaryRep& rep, std::span<const std::size_t> elements,
                         IndexForm form);

/// Coefficients of T_G(u (x) x_1 (x) ... (x) x_n), rows of a being the x_i.
std::vector<cplx> symmetrize_serial(const UnitaryRep& rep, std::span<const cplx> u, const CMatrix& a);
std::vector<cplx> symmetrize_parallel(const UnitaryRep& rep, std::span<const cplx> u, const CMatrix& a);

/// T_G applied to an arbitrary coefficient vector of order n.
std::vector<cplx> apply_serial(const UnitaryRep& rep, int n, std::span<const cplx> coeffs);
std::vector<cplx> apply_parallel(const UnitaryRep& rep, int n, std::span<const cplx> coeffs);

inline CMatrix gmf_sum(Exec exec, const CMatrix& k, const UnitaryRep& rep, std::span<const std::size_t> elements,
                       IndexForm form) {
  return exec == Exec::serial ? gmf_sum_serial(k, rep, elements, form) : gmf_sum_parallel(k, rep, elements, form);
}

inline std::vector<cplx> symmetrize(Exec exec, const UnitaryRep& rep, std::span<const cplx> u, const CMatrix& a) {
  return exec == Exec::serial ? symmetrize_serial(rep, u, a) : symmetrize_parallel(rep, u, a);
}

inline std::vector<cplx> apply(Exec exec, const UnitaryRep& rep, int n, std::span<const cplx> coeffs) {
  return exec == Exec::serial ? apply_serial(rep, n, coeffs) : apply_parallel(rep, n, coeffs);
}

/// n^n, the number of functions on {0..n-1}.
std::size_t function_count(int n);

}  // namespace schur::kernels
