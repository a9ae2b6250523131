#include "schur/json_io.hpp"

#include <cmath>
#include <string>

#include "schur/error.hpp"

namespace schur::json_io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

}  // namespace

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(std::span<const cplx> v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

json to_json(const Permutation& p) { return p.one_line(); }

json to_json(const EqualityDiagnosis& d) {
  json gens = json::array();
  for (const auto& [i, j] : d.support.transpositions) gens.push_back({i + 1, j + 1});
  return {
      {"gh_subset_g", d.gh_subset_g},
      {"sign_condition", d.sign_condition},
      {"witness", d.witness ? to_json(*d.witness) : json(nullptr)},
      {"checked_elements", d.checked_elements},
      {"support_generators", gens},
      {"support_order", d.support.group.order()},
  };
}

json to_json(const SchurReport& r) {
  return {
      {"det_H", to_json(r.det_h)}, {"value", r.value},       {"gap", r.gap},
      {"M_H", to_json(r.m_h)},     {"equality", r.equality}, {"diagnosis", to_json(r.diagnosis)},
  };
}

json to_json(const TraceReport& r) {
  return {{"m_det", r.m_det}, {"trace", r.trace}, {"equality", r.equality}, {"is_scalar", r.is_scalar}};
}

json to_json(const EqualityChain& c) {
  json conds = json::array();
  for (bool b : c.conditions) conds.push_back(b);
  return {
      {"conditions", conds},
      {"all_agree", c.all_agree()},
      {"k", c.k ? to_json(*c.k) : json(nullptr)},
      {"cs_lhs", c.cs_lhs},
      {"cs_rhs", c.cs_rhs},
      {"det_H", c.det_h},
      {"value", c.value},
      {"det_A_sq", c.det_a_sq},
      {"value_AA", c.value_aa},
  };
}

cplx parse_complex(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  fail(where, "expected a number or [re, im]");
}

CMatrix parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) fail(where + "[0]", "expected a non-empty row");
  const std::size_t cols = j[0].size();
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_at = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != cols) fail(row_at, "expected a row of length " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = parse_complex(j[i][c], row_at + "[" + std::to_string(c) + "]");
  }
  if (!m.all_finite()) fail(where, "non-finite entry");
  return m;
}

CVector parse_vector(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array");
  CVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_complex(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

Permutation parse_permutation(const json& j, int n, const std::string& where) {
  if (j.is_string()) return Permutation::parse_cycles(n, j.get<std::string>());
  if (!j.is_array() || static_cast<int>(j.size()) != n) fail(where, "expected " + std::to_string(n) + " one-line images or a cycle string");
  std::vector<int> images;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(where, "one-line images must be integers");
    images.push_back(v.get<int>());
  }
  try {
    return Permutation::from_one_based(images);
  } catch (const Error&) {
    fail(where, "images are not a permutation of 1.." + std::to_string(n));
  }
}

UnitaryRep parse_rep(const json& j, const PermGroup& g, const std::string& where) {
  if (j.is_string()) return UnitaryRep::builtin(j.get<std::string>(), g);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) fail(where, "expected an object with \"kind\"");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "builtin") {
    if (!j.contains("name") || !j["name"].is_string()) fail(where + ".name", "expected a string");
    return UnitaryRep::builtin(j["name"].get<std::string>(), g);
  }
  if (kind == "images") {
    if (!j.contains("images") || !j["images"].is_array()) fail(where + ".images", "expected an array");
    std::vector<std::pair<Permutation, CMatrix>> images;
    for (std::size_t k = 0; k < j["images"].size(); ++k) {
      const auto& item = j["images"][k];
      const std::string at = where + ".images[" + std::to_string(k) + "]";
      if (!item.is_object() || !item.contains("perm") || !item.contains("matrix")) fail(at, "expected {\"perm\", \"matrix\"}");
      images.emplace_back(parse_permutation(item["perm"], g.degree(), at + ".perm"), parse_matrix(item["matrix"], at + ".matrix"));
    }
    if (j.contains("m")) {
      if (!j["m"].is_number_integer()) fail(where + ".m", "expected an integer");
      const auto m = j["m"].get<std::size_t>();
      for (const auto& [p, mat] : images)
        if (mat.rows() != m) fail(where + ".m", "image of " + p.to_cycle_string() + " is not " + std::to_string(m) + "x" + std::to_string(m));
    }
    return UnitaryRep::from_generator_images(g, images);
  }
  fail(where + ".kind", "unknown kind \"" + kind + "\"");
}

}  // namespace schur::json_io
