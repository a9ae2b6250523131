#pragma once

// Shared fixtures and independent reference computations for the tests.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "schur/cmatrix.hpp"
#include "schur/cxlinalg.hpp"
#include "schur/permgroup.hpp"
#include "schur/random.hpp"
#include "schur/repcat.hpp"

namespace schur::testing {

inline const double kR3 = std::sqrt(3.0) / 2.0;

/// The 3x3 matrix with a single off-diagonal pair at (2,3).
inline CMatrix worked_h() {
  const cplx i{0.0, 1.0};
  return {{1.0, 0.0, 0.0}, {0.0, 3.0, i}, {0.0, -i, 1.0}};
}

inline Permutation cyc(int n, const std::string& text) { return Permutation::parse_cycles(n, text); }

/// The six subgroups of S3.
inline std::vector<PermGroup> subgroups_s3() {
  return {PermGroup::trivial(3),
          PermGroup::closure(3, {cyc(3, "(1 2)")}),
          PermGroup::closure(3, {cyc(3, "(1 3)")}),
          PermGroup::closure(3, {cyc(3, "(2 3)")}),
          PermGroup::alternating(3),
          PermGroup::symmetric(3)};
}

/// Closure of up to two random permutations.
inline PermGroup random_subgroup(int n, Rng& rng) {
  std::uniform_int_distribution<int> count(0, 2);
  std::vector<Permutation> gens;
  for (int k = count(rng); k > 0; --k) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
    std::shuffle(img.begin(), img.end(), rng);
    gens.emplace_back(std::move(img));
  }
  return PermGroup::closure(n, std::move(gens));
}

/// Haar-ish unitary from Gram-Schmidt on a Gaussian matrix.
inline CMatrix random_unitary(std::size_t m, Rng& rng) {
  CMatrix q = random_matrix(m, m, rng);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      cplx proj = 0.0;
      for (std::size_t i = 0; i < m; ++i) proj += q(i, j) * std::conj(q(i, k));
      for (std::size_t i = 0; i < m; ++i) q(i, j) -= proj * q(i, k);
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < m; ++i) nrm += std::norm(q(i, j));
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < m; ++i) q(i, j) /= nrm;
  }
  return q;
}

/// A built-in representation of g, possibly conjugated by a random unitary.
inline UnitaryRep random_rep(const PermGroup& g, Rng& rng) {
  std::vector<std::string> names{"trivial", "sign", "sign_plus_trivial", "natural_permutation"};
  if (g.degree() == 3) names.push_back("s3_standard_2d");
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  const UnitaryRep base = UnitaryRep::builtin(names[pick(rng)], g);
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) return base;
  const CMatrix q = random_unitary(base.dim(), rng);
  std::vector<CMatrix> table;
  for (const auto& m : base.table()) table.push_back(q * m * q.adjoint());
  return UnitaryRep::from_table(g, std::move(table), base.name() + "_conjugated");
}

/// M_K straight from the definition, no kernels involved.
inline CMatrix naive_gmf(const CMatrix& k, const PermGroup& g, const UnitaryRep& rep) {
  CMatrix out = CMatrix::zeros(rep.dim(), rep.dim());
  for (std::size_t e = 0; e < g.order(); ++e) {
    const Permutation& s = g.elements()[e];
    cplx prod = 1.0;
    for (int i = 0; i < g.degree(); ++i) prod *= k(static_cast<std::size_t>(i), static_cast<std::size_t>(s(i)));
    out += prod * rep.evaluate(s);
  }
  return out;
}

inline bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }
inline bool near(const CMatrix& a, const CMatrix& b, double tol) { return max_abs_diff(a, b) <= tol; }

}  // namespace schur::testing
