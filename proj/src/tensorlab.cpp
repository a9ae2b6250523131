#include "schur/tensorlab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "schur/compat.hpp"
#include "schur/cxlinalg.hpp"
#include "schur/error.hpp"

namespace schur {

namespace {

void require_upper(const CMatrix& a, const Tolerances& tol, const char* what) {
  if (!is_upper_triangular(a, tol.zero))
    throw Error(ErrorKind::PreconditionViolated, std::string(what) + " needs an upper triangular matrix");
}

void require_nonsingular_upper(const CMatrix& a, const Tolerances& tol, const char* what) {
  require_upper(a, tol, what);
  const double cutoff = tol.zero * a.max_abs();
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!(std::abs(a(i, i)) > cutoff))
      throw Error(ErrorKind::PreconditionViolated, std::string(what) + " needs a nonsingular matrix; a(" +
                                                       std::to_string(i + 1) + "," + std::to_string(i + 1) + ") = 0");
}

// (v, u (x) e_alpha) read straight off the coefficients.
cplx against_basis(const TensorVector& v, std::span<const cplx> u, const MultiIndex& alpha) {
  cplx s = 0.0;
  for (std::size_t j = 0; j < v.degree(); ++j) s += v.at(j, alpha) * std::conj(u[j]);
  return s;
}

}  // namespace

int tensor_max_n() {
  if (const char* env = std::getenv("SCHUR_TENSOR_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 16) return static_cast<int>(v);
  }
  return kTensorMaxN;
}

TensorVector::TensorVector(std::size_t m, int n) : m_(m), n_(n) {
  if (n < 1 || n > tensor_max_n())
    throw Error(ErrorKind::TooLarge, "tensor order " + std::to_string(n) + " outside 1.." + std::to_string(tensor_max_n()) +
                                         " (SCHUR_TENSOR_MAX_N raises the cap)");
  if (m < 1 || m > kTensorMaxM) throw Error(ErrorKind::TooLarge, "tensor degree " + std::to_string(m) + " outside 1..8");
  coeffs_.assign(kernels::function_count(n) * m, cplx{});
}

TensorVector::TensorVector(std::size_t m, int n, std::vector<cplx> coeffs) : TensorVector(m, n) {
  if (coeffs.size() != coeffs_.size()) throw Error(ErrorKind::ShapeMismatch, "coefficient count");
  coeffs_ = std::move(coeffs);
}

TensorVector& TensorVector::operator-=(const TensorVector& other) {
  if (m_ != other.m_ || n_ != other.n_) throw Error(ErrorKind::ShapeMismatch, "tensor shapes differ");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

TensorVector& TensorVector::operator*=(cplx s) {
  for (auto& z : coeffs_) z *= s;
  return *this;
}

TensorVector symmetrize(const UnitaryRep& rep, std::span<const cplx> u, const CMatrix& a, kernels::Exec exec) {
  TensorVector out(rep.dim(), rep.group().degree());
  auto coeffs = kernels::symmetrize(exec, rep, u, a);
  std::copy(coeffs.begin(), coeffs.end(), out.coeffs().begin());
  return out;
}

TensorVector apply_symmetry(const UnitaryRep& rep, const TensorVector& v, kernels::Exec exec) {
  if (v.degree() != rep.dim()) throw Error(ErrorKind::ShapeMismatch, "tensor degree differs from representation degree");
  return TensorVector(v.degree(), v.order(), kernels::apply(exec, rep, v.order(), v.coeffs()));
}

cplx inner(const TensorVector& v, const TensorVector& w) {
  if (v.degree() != w.degree() || v.order() != w.order()) throw Error(ErrorKind::ShapeMismatch, "tensor shapes differ");
  return dot(v.coeffs(), w.coeffs());
}

std::optional<cplx> collinearity(const UnitaryRep& rep, std::span<const cplx> u, const CMatrix& a,
                                 const Tolerances& tol) {
  require_nonsingular_upper(a, tol, "collinearity");
  require_unit(u, rep.dim(), tol);
  const int n = rep.group().degree();
  const TensorVector v = symmetrize(rep, u, a);
  const TensorVector w = symmetrize(rep, u, CMatrix::identity(static_cast<std::size_t>(n)));
  const cplx k = inner(v, w) / inner(w, w);
  TensorVector residual = w;
  residual *= k;
  residual -= v;
  if (residual.norm() <= tol.collinear * v.norm() && std::abs(k) > tol.k_floor) return k;
  return std::nullopt;
}

BasisInner basis_inner(const UnitaryRep& rep, std::span<const cplx> u, const CMatrix& a, const MultiIndex& alpha,
                       const Tolerances& tol) {
  require_upper(a, tol, "basis_inner");
  const int n = rep.group().degree();
  if (alpha.size() != n) throw Error(ErrorKind::ShapeMismatch, "multi-index length differs from group degree");
  const PermGroup& g = rep.group();

  auto product = [&](const Permutation& s) {
    cplx p = 1.0;
    for (int i = 0; i < n; ++i) p *= a(static_cast<std::size_t>(i), static_cast<std::size_t>(alpha(s(i))));
    return p;
  };

  BasisInner out;
  double scale = 1.0;
  for (const auto& s : restricted_compatible(alpha, a, tol.zero)) {
    if (!g.contains(s)) continue;
    const cplx term = quadratic_form(rep.evaluate(s), u, u) * product(s);
    out.restricted_sum += term;
    scale = std::max(scale, std::abs(term));
  }

  // Outside the compatible set the upper triangular shape kills the product.
  const auto compat = compatible(alpha);
  const double cutoff = tol.zero * std::pow(std::max(1.0, a.max_abs()), n);
  for (const auto& s : g.elements()) {
    if (std::binary_search(compat.begin(), compat.end(), s)) continue;
    if (std::abs(product(s)) > cutoff)
      throw Error(ErrorKind::InternalError, "incompatible permutation " + s.to_cycle_string() + " has a nonzero product");
  }

  out.coefficient = against_basis(symmetrize(rep, u, a), u, alpha);
  const double gap = std::abs(out.coefficient - out.restricted_sum);
  if (gap > tol.oracle * scale)
    throw Error(ErrorKind::InternalError, "restricted sum and tensor coefficient differ by " + std::to_string(gap) +
                                              " at alpha = " + alpha.to_string());
  return out;
}

CMatrix project(const CMatrix& a, int p) {
  if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "project needs a square matrix");
  if (p < 0 || p >= static_cast<int>(a.rows()))
    throw Error(ErrorKind::IndexOutOfRange, "projection index " + std::to_string(p + 1) + " outside 1.." + std::to_string(a.rows()));
  require_upper(a, kDefaultTolerances, "project");
  return delete_rc(a, static_cast<std::size_t>(p));
}

double projection_identity_check(const UnitaryRep& rep, std::span<const cplx> u, const CMatrix& a, int p,
                                 const Tolerances& tol) {
  const int n = rep.group().degree();
  if (n < 2) throw Error(ErrorKind::PreconditionViolated, "projection needs order n >= 2");
  if (!a.is_square() || static_cast<int>(a.rows()) != n)
    throw Error(ErrorKind::ShapeMismatch, "A must be n x n");
  if (p < 0 || p >= n) throw Error(ErrorKind::IndexOutOfRange, "projection index outside 1..n");
  require_upper(a, tol, "projection_identity_check");
  const double cutoff = tol.zero * a.max_abs();
  for (int i = 0; i < n; ++i)
    if (i != p && std::abs(a(static_cast<std::size_t>(i), static_cast<std::size_t>(p))) > cutoff)
      throw Error(ErrorKind::PreconditionViolated, "column " + std::to_string(p + 1) + " has an off-diagonal nonzero in row " +
                                                       std::to_string(i + 1));

  const TensorVector full = symmetrize(rep, u, a);
  const UnitaryRep reduced_rep = rep.restrict_to_stabilizer(p);
  const TensorVector reduced = symmetrize(reduced_rep, u, project(a, p));
  const cplx app = a(static_cast<std::size_t>(p), static_cast<std::size_t>(p));

  double worst = 0.0;
  for (const auto& pair : gamma_np(n, p)) {
    const cplx lhs = against_basis(full, u, pair.gamma);
    const cplx rhs = against_basis(reduced, u, pair.restricted);
    worst = std::max(worst, std::abs(lhs - app * rhs));
  }
  return worst;
}

bool EqualityChain::all_agree() const noexcept {
  return std::all_of(conditions.begin(), conditions.end(), [&](bool c) { return c == conditions[0]; });
}

EqualityChain equality_chain_report(const CMatrix& h, const PermGroup& g, const UnitaryRep& rep,
                                    std::span<const cplx> u, const Tolerances& tol) {
  require_rep_of(rep, g);
  require_unit(u, rep.dim(), tol);
  EqualityChain r;
  r.a = upper_cholesky(h, tol.pd, tol.linalg);
  const auto n = static_cast<std::size_t>(g.degree());

  r.k = collinearity(rep, u, r.a, tol);
  r.conditions[0] = r.k.has_value();

  const TensorVector v = symmetrize(rep, u, r.a);
  const TensorVector w = symmetrize(rep, u, CMatrix::identity(n));
  r.cs_lhs = std::norm(inner(v, w));
  r.cs_rhs = inner(v, v).real() * inner(w, w).real();
  r.conditions[1] = std::abs(r.cs_rhs - r.cs_lhs) <= tol.eq * std::max(1.0, r.cs_rhs);

  r.det_h = det(h).real();
  r.value = quadratic_form(gmf(h, g, rep, {}, tol), u, u).real();
  r.conditions[2] = std::abs(r.value - r.det_h) <= tol.eq * std::max(1.0, std::abs(r.det_h));

  r.det_a_sq = std::norm(det(r.a));
  r.value_aa = quadratic_form(gmf(ab_star(r.a, r.a), g, rep, {}, tol), u, u).real();
  r.conditions[3] = std::abs(r.value_aa - r.det_a_sq) <= tol.eq * std::max(1.0, r.det_a_sq);

  r.conditions[4] = support_condition(h, g, rep, u, tol).holds();
  r.conditions[5] = support_condition(r.a, g, rep, u, tol).holds();
  return r;
}

}  // namespace schur
