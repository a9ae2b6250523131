#pragma once

// Schur generalized matrix functions
//
//   M_K = sum_{s in G} M(s) prod_i K(i, s(i)) = sum_{s in G} M(s) prod_i K(s^-1(i), i)
//
// and the inequality det(H) <= (M_H u, u) for positive definite H and unit
// u, together with its equality diagnosis: equality holds exactly when the
// support group of H lies in G and (M(s)u, u) = sign(s) on that group.

#include <optional>
#include <span>

#include "schur/cmatrix.hpp"
#include "schur/kernels.hpp"
#include "schur/permgroup.hpp"
#include "schur/repcat.hpp"
#include "schur/tolerances.hpp"

namespace schur {

struct GmfOptions {
  kernels::Exec exec = kernels::Exec::parallel;
  /// Recompute M_K with the second index form and with the sum cut down to
  /// the support group of K; any disagreement throws InternalError.
  bool cross_check = true;
};

CMatrix gmf(const CMatrix& k, const PermGroup& g, const UnitaryRep& rep, const GmfOptions& opts = {},
            const Tolerances& tol = kDefaultTolerances);

/// M_K summed only over elements of g inside the support group of K.
CMatrix gmf_support_restricted(const CMatrix& k, const PermGroup& g, const UnitaryRep& rep,
                               kernels::Exec exec = kernels::Exec::serial,
                               const Tolerances& tol = kDefaultTolerances);

struct EqualityDiagnosis {
  bool gh_subset_g = false;
  bool sign_condition = false;
  /// A generator of the support group outside G, or an element whose
  /// (M(s)u, u) misses sign(s). Present iff one of the flags is false.
  std::optional<Permutation> witness;
  std::size_t checked_elements = 0;
  SupportGroup support;
  bool holds() const noexcept { return gh_subset_g && sign_condition; }
};

struct SchurReport {
  cplx det_h;
  double value = 0.0;
  double gap = 0.0;
  CMatrix m_h;
  bool equality = false;
  EqualityDiagnosis diagnosis;
};

struct MarcusResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

struct TraceReport {
  double m_det = 0.0;
  double trace = 0.0;
  bool equality = false;
  bool is_scalar = false;
};

/// Throws RepGroupMismatch unless rep is a representation of exactly g.
void require_rep_of(const UnitaryRep& rep, const PermGroup& g);
/// Throws NotUnit unless | ||u|| - 1 | <= tol.linalg, ShapeMismatch on length.
void require_unit(std::span<const cplx> u, std::size_t dim, const Tolerances& tol = kDefaultTolerances);

/// Support-group condition on any square D: G_D inside G and
/// (M(s)u, u) = sign(s) for every s in G_D (checked on every element and,
/// when G_D lies in G, again on its generating transpositions only).
EqualityDiagnosis support_condition(const CMatrix& d, const PermGroup& g, const UnitaryRep& rep,
                                    std::span<const cplx> u, const Tolerances& tol = kDefaultTolerances);

EqualityDiagnosis equality_diagnose(const CMatrix& h, const PermGroup& g, const UnitaryRep& rep,
                                    std::span<const cplx> u, const Tolerances& tol = kDefaultTolerances);

SchurReport schur_check(const CMatrix& h, const PermGroup& g, const UnitaryRep& rep, std::span<const cplx> u,
                        const Tolerances& tol = kDefaultTolerances);

MarcusResult marcus_check(const CMatrix& a, const CMatrix& b, const PermGroup& g, const UnitaryRep& rep,
                          std::span<const cplx> u1, std::span<const cplx> u2,
                          const Tolerances& tol = kDefaultTolerances);

TraceReport trace_report(const CMatrix& h, const PermGroup& g, const UnitaryRep& rep,
                         const Tolerances& tol = kDefaultTolerances);

}  // namespace schur
