#pragma once

// JSON forms: complex numbers as [re, im] (plain numbers accepted on input),
// matrices as row-major nested arrays, permutations as 1-based one-line
// arrays (cycle strings such as "(1 2)(3 4)" accepted on input).

#include <json.hpp>

#include "schur/cmatrix.hpp"
#include "schur/genmatfn.hpp"
#include "schur/permgroup.hpp"
#include "schur/repcat.hpp"
#include "schur/tensorlab.hpp"

namespace schur::json_io {

using nlohmann::json;

json to_json(cplx z);
json to_json(const CMatrix& m);
json to_json(std::span<const cplx> v);
json to_json(const Permutation& p);
json to_json(const EqualityDiagnosis& d);
json to_json(const SchurReport& r);
json to_json(const TraceReport& r);
json to_json(const EqualityChain& c);

/// The parse_* functions throw ParseError naming the offending field path.
cplx parse_complex(const json& j, const std::string& where);
CMatrix parse_matrix(const json& j, const std::string& where);
CVector parse_vector(const json& j, const std::string& where);
Permutation parse_permutation(const json& j, int n, const std::string& where);

/// {"kind":"builtin","name":...} or
/// {"kind":"images","m":...,"images":[{"perm":[...],"matrix":[...]},...]}
UnitaryRep parse_rep(const json& j, const PermGroup& g, const std::string& where);

}  // namespace schur::json_io
