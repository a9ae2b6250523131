#include <doctest.h>

#include <cstdlib>

#include "schur/compat.hpp"
#include "schur/error.hpp"
#include "schur/genmatfn.hpp"
#include "schur/tensorlab.hpp"
#include "support/support.hpp"

using namespace schur;
using namespace schur::testing;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalError;
}

MultiIndex mi(std::vector<int> one_based) { return MultiIndex::from_one_based(one_based); }

}  // namespace

TEST_CASE("trivial group, identity matrix: a single block") {
  const auto g = PermGroup::trivial(3);
  const auto rep = UnitaryRep::builtin("natural_permutation", g);
  const CVector u{0.6, cplx(0, 0.8), 0.0};
  const auto v = symmetrize(rep, u, CMatrix::identity(3));
  const auto id = MultiIndex::identity(3);
  for (std::size_t code = 0; code < 27; ++code)
    for (std::size_t j = 0; j < 3; ++j) {
      const cplx expect = code == id.encode() ? u[j] : 0.0;
      CHECK(v.coeffs()[code * 3 + j] == expect);
    }
}

TEST_CASE("n = 2 closed forms") {
  const auto g = PermGroup::symmetric(2);
  const auto rep = UnitaryRep::builtin("sign_plus_trivial", g);
  const CMatrix& m_tau = rep.evaluate(cyc(2, "(1 2)"));
  const CVector u{0.6, 0.8};
  const CVector mu = m_tau * std::span<const cplx>(u);

  const auto e = symmetrize(rep, u, CMatrix::identity(2));
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(near(e.at(j, mi({1, 2})), u[j], 1e-15));
    CHECK(near(e.at(j, mi({2, 1})), mu[j], 1e-15));
    CHECK(near(e.at(j, mi({1, 1})), 0.0, 1e-15));
    CHECK(near(e.at(j, mi({2, 2})), 0.0, 1e-15));
  }

  const cplx a11{1.5, 0.2}, a12{-0.3, 0.7}, a22{0.9, -0.4};
  const CMatrix a{{a11, a12}, {0.0, a22}};
  const auto x = symmetrize(rep, u, a);
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(near(x.at(j, mi({1, 2})), a11 * a22 * u[j], 1e-14));
    CHECK(near(x.at(j, mi({2, 1})), a11 * a22 * mu[j], 1e-14));
    CHECK(near(x.at(j, mi({2, 2})), a12 * a22 * (u[j] + mu[j]), 1e-14));
    CHECK(near(x.at(j, mi({1, 1})), 0.0, 1e-14));
  }
}

TEST_CASE("inner products") {
  Rng rng(61);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t % 3;
    const auto g = random_subgroup(n, rng);
    const auto rep = random_rep(g, rng);
    const auto u = random_unit(rep.dim(), rng);
    const auto w = symmetrize(rep, u, CMatrix::identity(static_cast<std::size_t>(n)));
    CHECK(near(inner(w, w), static_cast<double>(g.order()), 1e-10));

    const auto u2 = random_unit(rep.dim(), rng);
    const auto a = random_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n), rng);
    const auto b = random_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n), rng);
    const cplx lhs = inner(symmetrize(rep, u, a), symmetrize(rep, u2, b));
    const cplx rhs = static_cast<double>(g.order()) * quadratic_form(gmf(ab_star(a, b), g, rep), u, u2);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs) + std::abs(rhs)));

    const auto v = symmetrize(rep, u, a);
    CHECK(inner(v, v).real() >= 0.0);
    CHECK(std::abs(inner(v, v).imag()) < 1e-10 * (1.0 + inner(v, v).real()));
  }
  const TensorVector z(2, 3);
  CHECK(inner(z, z) == cplx(0.0));
}

TEST_CASE("collinearity") {
  const auto g = PermGroup::symmetric(2);
  const auto rep = UnitaryRep::builtin("sign_plus_trivial", g);
  const CVector u_sign{1.0, 0.0};   // (M(t)u, u) = -1
  const CVector u_mixed{0.6, 0.8};  // (M(t)u, u) = -0.36 + 0.64
  const auto k_id = collinearity(rep, u_mixed, CMatrix::identity(2));
  REQUIRE(k_id.has_value());
  CHECK(near(*k_id, 1.0, 1e-14));

  const cplx a11{1.5, 0.2}, a22{0.9, -0.4};
  const CMatrix a{{a11, 0.5}, {0.0, a22}};
  const auto k = collinearity(rep, u_sign, a);
  REQUIRE(k.has_value());
  CHECK(near(*k, a11 * a22, 1e-12));
  CHECK_FALSE(collinearity(rep, u_mixed, a).has_value());

  CHECK(kind_of([&] { collinearity(rep, u_sign, CMatrix{{1.0, 0.0}, {1.0, 1.0}}); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([&] { collinearity(rep, u_sign, CMatrix{{1.0, 1.0}, {0.0, 0.0}}); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("basis_inner") {
  const auto s3 = PermGroup::symmetric(3);
  const auto rep = UnitaryRep::builtin("s3_standard_2d", s3);
  const CVector u{0.6, 0.8};
  const auto b = basis_inner(rep, u, CMatrix::identity(3), MultiIndex::identity(3));
  CHECK(near(b.coefficient, 1.0, 1e-12));
  CHECK(near(b.restricted_sum, 1.0, 1e-12));

  // a13 = 0, a23 != 0: maximal row spike of column 3 is (2,3)
  const CMatrix a{{1.2, 0.4, 0.0}, {0.0, cplx(0.7, 0.1), cplx(-0.5, 0.3)}, {0.0, 0.0, 0.8}};
  const auto spike = max_row_spike(a, 2);
  REQUIRE(spike.has_value());
  const auto alpha = spike->as_multi_index(3);
  const cplx diag_rest = a(0, 0) * a(2, 2);
  const cplx tau_form = quadratic_form(rep.evaluate(cyc(3, "(2 3)")), u, u);

  const auto in_g = basis_inner(rep, u, a, alpha);
  CHECK(near(in_g.coefficient, (1.0 + tau_form) * diag_rest * a(1, 2), 1e-12));

  const auto sub = PermGroup::alternating(3);
  const auto out_g = basis_inner(rep.restrict_to(sub), u, a, alpha);
  CHECK(near(out_g.coefficient, diag_rest * a(1, 2), 1e-12));
}

TEST_CASE("project") {
  CHECK(near(project(CMatrix::identity(4), 2), CMatrix::identity(3), 0.0));
  CHECK(near(project(CMatrix{{1.0, 2.0, 0.0}, {0.0, 3.0, 0.0}, {0.0, 0.0, 5.0}}, 1), CMatrix{{1.0, 0.0}, {0.0, 5.0}}, 0.0));
  const auto a = upper_cholesky(worked_h());
  CHECK(near(project(a, 0), upper_cholesky(delete_rc(worked_h(), 0)), 1e-12));
  CHECK(kind_of([] { project(CMatrix{{1.0, 0.0}, {1.0, 1.0}}, 0); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("projection identity") {
  const auto s3 = PermGroup::symmetric(3);
  const auto rep = UnitaryRep::builtin("s3_standard_2d", s3);
  const CVector u{0.6, 0.8};
  for (int p = 0; p < 3; ++p) CHECK(projection_identity_check(rep, u, CMatrix::identity(3), p) <= 1e-12);
  const CMatrix a{{1.0, 1.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 2.0}};
  CHECK(gamma_np(3, 2).size() == 4);
  CHECK(projection_identity_check(rep, u, a, 2) <= 1e-9);
  CHECK(kind_of([&] { projection_identity_check(rep, u, a, 1); }) == ErrorKind::PreconditionViolated);

  // scaling a_pp scales the left side for every gamma
  CMatrix a2 = a;
  a2(2, 2) *= 3.0;
  const auto v1 = symmetrize(rep, u, a), v3 = symmetrize(rep, u, a2);
  for (const auto& pair : gamma_np(3, 2))
    for (std::size_t j = 0; j < 2; ++j) CHECK(near(v3.at(j, pair.gamma), 3.0 * v1.at(j, pair.gamma), 1e-12));
}

TEST_CASE("equality chain") {
  const auto s3 = PermGroup::symmetric(3);
  const auto rep = UnitaryRep::builtin("s3_standard_2d", s3);
  const auto id = equality_chain_report(CMatrix::identity(3), s3, rep, CVector{0.6, 0.8});
  for (bool c : id.conditions) CHECK(c);

  const auto at_min = equality_chain_report(worked_h(), s3, rep, CVector{-kR3, 0.5});
  for (bool c : at_min.conditions) CHECK(c);

  const auto at_e1 = equality_chain_report(worked_h(), s3, rep, CVector{1.0, 0.0});
  for (bool c : at_e1.conditions) CHECK_FALSE(c);
}

TEST_CASE("size caps") {
  CHECK(kind_of([] { TensorVector(2, 7); }) == ErrorKind::TooLarge);
  CHECK(kind_of([] { TensorVector(9, 2); }) == ErrorKind::TooLarge);
  ::setenv("SCHUR_TENSOR_MAX_N", "7", 1);
  CHECK(tensor_max_n() == 7);
  ::setenv("SCHUR_TENSOR_MAX_N", "junk", 1);
  CHECK(tensor_max_n() == kTensorMaxN);
  ::unsetenv("SCHUR_TENSOR_MAX_N");
  CHECK(tensor_max_n() == kTensorMaxN);
}
