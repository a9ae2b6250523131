#pragma once

// Problem files: one JSON object per problem.
//
//   {
//     "n": 3,
//     "group": "Sn" | "An" | "trivial" | {"generators": ["(1 2)", [2,3,1]]},
//     "representation": {"kind": "builtin", "name": "s3_standard_2d"},
//     "H": [[[1,0],[0,0],...], ...],        (or "A": ..., giving H = A A*)
//     "u": [[re,im], ...],                  (optional)
//     "options": {"tol_zero": 1e-12, "tol_eq": 1e-8, "normalize_u": false}
//   }

#include <optional>
#include <string>

#include <json.hpp>

#include "schur/cmatrix.hpp"
#include "schur/permgroup.hpp"
#include "schur/repcat.hpp"
#include "schur/tolerances.hpp"

namespace schur::cli {

struct Problem {
  std::string source;
  int n = 0;
  PermGroup group;
  std::string group_label;
  UnitaryRep rep;
  CMatrix h;
  /// Present when the file gave A instead of H.
  std::optional<CMatrix> a;
  std::optional<CVector> u;
  Tolerances tol = kDefaultTolerances;
  bool normalize_u = false;
};

/// Command-line settings layered over the file's "options".
struct Overrides {
  std::optional<double> tol_zero;
  std::optional<double> tol_eq;
  bool normalize_u = false;
};

PermGroup parse_group(const nlohmann::json& j, int n, const std::string& where);

/// Throws ParseError on malformed or dimension-inconsistent input.
Problem parse_problem(const nlohmann::json& j, const std::string& source, const Overrides& overrides = {});
Problem load_problem(const std::string& path, const Overrides& overrides = {});

/// The probe vector: u from the file (rescaled if normalize_u), otherwise
/// the eigenvector of the smallest eigenvalue of m_h.
CVector resolve_u(const Problem& p, const CMatrix& m_h);

}  // namespace schur::cli
