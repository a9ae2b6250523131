#pragma once

// Per-element and per-coefficient bodies shared by the serial and OpenMP
// kernels; both call these with identical operand order.

#include <cstddef>
#include <span>
#include <vector>

#include "schur/cmatrix.hpp"
#include "schur/error.hpp"
#include "schur/kernels.hpp"
#include "schur/repcat.hpp"

namespace schur::kernels::detail {

inline cplx diagonal_product(const CMatrix& k, const Permutation& s, IndexForm form) {
  const int n = s.degree();
  cplx prod = 1.0;
  if (form == IndexForm::row_image) {
    for (int i = 0; i < n; ++i) {
      const cplx f = k(static_cast<std::size_t>(i), static_cast<std::size_t>(s(i)));
      if (f == cplx{}) return 0.0;
      prod *= f;
    }
  } else {
    const Permutation inv = s.inverse();
    for (int i = 0; i < n; ++i) {
      const cplx f = k(static_cast<std::size_t>(inv(i)), static_cast<std::size_t>(i));
      if (f == cplx{}) return 0.0;
      prod *= f;
    }
  }
  return prod;
}

inline void add_scaled(CMatrix& acc, const CMatrix& m, cplx w) {
  auto dst = acc.data();
  auto src = m.data();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += w * src[k];
}

inline void check_gmf_inputs(const CMatrix& k, const UnitaryRep& rep) {
  if (!k.is_square() || static_cast<int>(k.rows()) != rep.group().degree())
    throw Error(ErrorKind::ShapeMismatch, "K must be n x n with n the group degree");
}

/// Per-element data reused across every tensor coefficient.
struct SymmetrizeTables {
  int n = 0;
  std::size_t m = 0;
  std::vector<std::vector<int>> inverses;  // s^-1 per element
  std::vector<CVector> moved_u;            // M(s) u per element
};

SymmetrizeTables make_symmetrize_tables(const UnitaryRep& rep, std::span<const cplx> u, const CMatrix& a);

/// Fills out[0..m) with the coefficient block at code.
inline void symmetrize_block(const SymmetrizeTables& t, const CMatrix& a, std::size_t code, cplx* out) {
  int digits[16];
  std::size_t c = code;
  for (int i = 0; i < t.n; ++i) {
    digits[i] = static_cast<int>(c % static_cast<std::size_t>(t.n));
    c /= static_cast<std::size_t>(t.n);
  }
  for (std::size_t j = 0; j < t.m; ++j) out[j] = 0.0;
  for (std::size_t e = 0; e < t.inverses.size(); ++e) {
    const auto& inv = t.inverses[e];
    cplx prod = 1.0;
    for (int i = 0; i < t.n; ++i) {
      const cplx f = a(static_cast<std::size_t>(inv[static_cast<std::size_t>(i)]), static_cast<std::size_t>(digits[i]));
      if (f == cplx{}) {
        prod = 0.0;
        break;
      }
      prod *= f;
    }
    if (prod == cplx{}) continue;
    const auto& mu = t.moved_u[e];
    for (std::size_t j = 0; j < t.m; ++j) out[j] += prod * mu[j];
  }
}

struct ApplyTables {
  int n = 0;
  std::size_t m = 0;
  std::vector<std::vector<int>> perms;  // s per element
  std::vector<std::size_t> powers;      // n^i
};

ApplyTables make_apply_tables(const UnitaryRep& rep, int n, std::size_t coeff_count);

/// out block at code: sum_s M(s) * in block at code(alpha o s).
inline void apply_block(const ApplyTables& t, const UnitaryRep& rep, std::span<const cplx> in, std::size_t code,
                        cplx* out) {
  int digits[16];
  std::size_t c = code;
  for (int i = 0; i < t.n; ++i) {
    digits[i] = static_cast<int>(c % static_cast<std::size_t>(t.n));
    c /= static_cast<std::size_t>(t.n);
  }
  for (std::size_t j = 0; j < t.m; ++j) out[j] = 0.0;
  for (std::size_t e = 0; e < t.perms.size(); ++e) {
    const auto& s = t.perms[e];
    std::size_t src = 0;
    for (int i = 0; i < t.n; ++i) src += static_cast<std::size_t>(digits[s[static_cast<std::size_t>(i)]]) * t.powers[static_cast<std::size_t>(i)];
    const cplx* block = in.data() + src * t.m;
    const CMatrix& mat = rep.at(e);
    for (std::size_t j = 0; j < t.m; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < t.m; ++k) acc += mat(j, k) * block[k];
      out[j] += acc;
    }
  }
}

}  // namespace schur::kernels::detail
