#include "schur/genmatfn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "schur/cxlinalg.hpp"
#include "schur/error.hpp"

namespace schur {

namespace {

std::vector<std::size_t> all_elements(const PermGroup& g) {
  std::vector<std::size_t> idx(g.order());
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

// sum over g of |prod_i K(i, s(i))|: the scale against which rounding in M_K is judged.
double term_magnitude(const CMatrix& k, const PermGroup& g) {
  double total = 0.0;
  for (const auto& s : g.elements()) {
    double prod = 1.0;
    for (int i = 0; i < g.degree(); ++i) prod *= std::abs(k(static_cast<std::size_t>(i), static_cast<std::size_t>(s(i))));
    total += prod;
  }
  return total;
}

void require_pd(const CMatrix& h, const Tolerances& tol) { (void)upper_cholesky(h, tol.pd, tol.linalg); }

}  // namespace

void require_rep_of(const UnitaryRep& rep, const PermGroup& g) {
  if (!same_group(rep.group(), g))
    throw Error(ErrorKind::RepGroupMismatch, "representation is defined on a group of order " +
                                                 std::to_string(rep.group().order()) + ", expected order " +
                                                 std::to_string(g.order()));
}

void require_unit(std::span<const cplx> u, std::size_t dim, const Tolerances& tol) {
  if (u.size() != dim)
    throw Error(ErrorKind::ShapeMismatch, "u has length " + std::to_string(u.size()) + ", expected " + std::to_string(dim));
  const double nrm = norm2(u);
  if (!(std::abs(nrm - 1.0) <= tol.linalg))
    throw Error(ErrorKind::NotUnit, "||u|| = " + std::to_string(nrm) + " (pass --normalize-u to rescale)");
}

CMatrix gmf(const CMatrix& k, const PermGroup& g, const UnitaryRep& rep, const GmfOptions& opts,
            const Tolerances& tol) {
  require_rep_of(rep, g);
  if (!k.is_square() || static_cast<int>(k.rows()) != g.degree())
    throw Error(ErrorKind::ShapeMismatch, "K must be " + std::to_string(g.degree()) + "x" + std::to_string(g.degree()));
  const auto idx = all_elements(g);
  CMatrix m_k = kernels::gmf_sum(opts.exec, k, rep, idx, kernels::IndexForm::row_image);
  if (!opts.cross_check) return m_k;

  const double scale = std::max(1.0, term_magnitude(k, g));
  const CMatrix by_columns = kernels::gmf_sum(opts.exec, k, rep, idx, kernels::IndexForm::column_preimage);
  const double d1 = max_abs_diff(m_k, by_columns);
  if (d1 > tol.linalg * scale)
    throw Error(ErrorKind::InternalError, "index forms of M_K disagree by " + std::to_string(d1));
  const CMatrix restricted = gmf_support_restricted(k, g, rep, opts.exec, tol);
  const double d2 = max_abs_diff(m_k, restricted);
  if (d2 > tol.linalg * scale)
    throw Error(ErrorKind::InternalError, "support-restricted M_K disagrees by " + std::to_string(d2));
  return m_k;
}

CMatrix gmf_support_restricted(const CMatrix& k, const PermGroup& g, const UnitaryRep& rep, kernels::Exec exec,
                               const Tolerances& tol) {
  require_rep_of(rep, g);
  const auto support = support_group(k, tol.zero);
  std::vector<std::size_t> idx;
  for (std::size_t e = 0; e < g.order(); ++e)
    if (support.group.contains(g.elements()[e])) idx.push_back(e);
  return kernels::gmf_sum(exec, k, rep, idx, kernels::IndexForm::row_image);
}

EqualityDiagnosis support_condition(const CMatrix& d, const PermGroup& g, const UnitaryRep& rep,
                                    std::span<const cplx> u, const Tolerances& tol) {
  require_rep_of(rep, g);
  EqualityDiagnosis out;
  out.support = support_group(d, tol.zero);
  const PermGroup& gd = out.support.group;

  out.gh_subset_g = is_subgroup(gd, g);
  if (out.gh_subset_g != is_subgroup_by_generators(gd, g))
    throw Error(ErrorKind::InternalError, "generator and element subgroup tests disagree");
  std::optional<Permutation> outside;
  for (const auto& s : gd.generators())
    if (!g.contains(s)) {
      outside = s;
      break;
    }

  out.sign_condition = true;
  std::optional<Permutation> sign_witness;
  for (const auto& s : gd.elements()) {
    if (!g.contains(s)) continue;
    ++out.checked_elements;
    const cplx value = quadratic_form(rep.evaluate(s), u, u);
    if (std::abs(value - cplx(s.sign())) > tol.eq) {
      out.sign_condition = false;
      if (!sign_witness) sign_witness = s;
    }
  }

  if (out.gh_subset_g) {
    // Unit eigenvectors multiply their eigenvalues along products, so the
    // generating transpositions decide the whole group.
    const bool fast = std::all_of(gd.generators().begin(), gd.generators().end(), [&](const Permutation& t) {
      return std::abs(quadratic_form(rep.evaluate(t), u, u) + 1.0) <= tol.eq;
    });
    if (fast != out.sign_condition)
      throw Error(ErrorKind::InternalError, "generator-only sign check disagrees with full enumeration");
  }

  if (!out.gh_subset_g)
    out.witness = outside;
  else if (!out.sign_condition)
    out.witness = sign_witness;
  return out;
}

EqualityDiagnosis equality_diagnose(const CMatrix& h, const PermGroup& g, const UnitaryRep& rep,
                                    std::span<const cplx> u, const Tolerances& tol) {
  require_pd(h, tol);
  require_rep_of(rep, g);
  require_unit(u, rep.dim(), tol);
  return support_condition(h, g, rep, u, tol);
}

SchurReport schur_check(const CMatrix& h, const PermGroup& g, const UnitaryRep& rep, std::span<const cplx> u,
                        const Tolerances& tol) {
  require_pd(h, tol);
  require_rep_of(rep, g);
  require_unit(u, rep.dim(), tol);

  SchurReport r;
  r.m_h = gmf(h, g, rep, {}, tol);
  r.det_h = det(h);
  const cplx value = quadratic_form(r.m_h, u, u);
  if (std::abs(value.imag()) > tol.linalg * std::max(1.0, std::abs(value)))
    throw Error(ErrorKind::InternalError, "(M_H u, u) has imaginary part " + std::to_string(value.imag()));
  r.value = value.real();
  r.gap = r.value - r.det_h.real();
  r.equality = std::abs(r.gap) <= tol.eq * std::max(1.0, std::abs(r.det_h));

  const auto eig = herm_eig(r.m_h, tol.linalg);
  if (eig.values.front() <= 0.0)
    throw Error(ErrorKind::InternalError, "M_H has a non-positive eigenvalue " + std::to_string(eig.values.front()));

  r.diagnosis = support_condition(h, g, rep, u, tol);
  return r;
}

MarcusResult marcus_check(const CMatrix& a, const CMatrix& b, const PermGroup& g, const UnitaryRep& rep,
                          std::span<const cplx> u1, std::span<const cplx> u2, const Tolerances& tol) {
  require_rep_of(rep, g);
  require_unit(u1, rep.dim(), tol);
  require_unit(u2, rep.dim(), tol);
  const CMatrix m_ab = gmf(ab_star(a, b), g, rep, {}, tol);
  const CMatrix m_aa = gmf(ab_star(a, a), g, rep, {}, tol);
  const CMatrix m_bb = gmf(ab_star(b, b), g, rep, {}, tol);
  MarcusResult r;
  r.lhs = std::norm(quadratic_form(m_ab, u1, u2));
  r.rhs = quadratic_form(m_aa, u1, u1).real() * quadratic_form(m_bb, u2, u2).real();
  r.holds = r.lhs <= r.rhs + 1e-9 * (1.0 + r.rhs);
  return r;
}

TraceReport trace_report(const CMatrix& h, const PermGroup& g, const UnitaryRep& rep, const Tolerances& tol) {
  require_pd(h, tol);
  require_rep_of(rep, g);
  const CMatrix m_h = gmf(h, g, rep, {}, tol);
  const double d = det(h).real();
  const cplx tr = m_h.trace();
  if (std::abs(tr.imag()) > tol.linalg * std::max(1.0, std::abs(tr)))
    throw Error(ErrorKind::InternalError, "Tr(M_H) has imaginary part " + std::to_string(tr.imag()));

  TraceReport r;
  r.m_det = static_cast<double>(rep.dim()) * d;
  r.trace = tr.real();
  const double scale = std::max(1.0, std::abs(r.trace));
  r.equality = std::abs(r.trace - r.m_det) <= tol.eq * scale;
  const CMatrix offset = m_h - d * CMatrix::identity(rep.dim());
  r.is_scalar = offset.frobenius() <= tol.eq * scale;
  if (r.equality != r.is_scalar)
    throw Error(ErrorKind::InternalError, "trace equality and scalar test disagree");
  return r;
}

}  // namespace schur
