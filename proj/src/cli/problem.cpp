#include "schur/cli/problem.hpp"

#include <fstream>
#include <set>
#include <cmath>

#include "schur/cxlinalg.hpp"
#include "schur/error.hpp"
#include "schur/json_io.hpp"

namespace schur::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : j.items())
    if (!allowed.contains(key)) fail(where, "unknown field \"" + key + "\"");
}

double positive_number(const json& j, const std::string& where) {
  if (!j.is_number() || !(j.get<double>() > 0.0)) fail(where, "expected a positive number");
  return j.get<double>();
}

std::string label_for(const std::string& name, int n) {
  if (name == "Sn" || name == "S" + std::to_string(n)) return "S" + std::to_string(n);
  if (name == "An" || name == "A" + std::to_string(n)) return "A" + std::to_string(n);
  if (name == "trivial") return "trivial";
  return {};
}

}  // namespace

PermGroup parse_group(const json& j, int n, const std::string& where) {
  if (j.is_string()) {
    const auto label = label_for(j.get<std::string>(), n);
    if (label.empty()) fail(where, "unknown group \"" + j.get<std::string>() + "\" (use Sn, An, trivial or generators)");
    if (label == "trivial") return PermGroup::trivial(n);
    return label[0] == 'S' ? PermGroup::symmetric(n) : PermGroup::alternating(n);
  }
  const json* gens = &j;
  std::string at = where;
  if (j.is_object()) {
    reject_unknown(j, {"generators"}, where);
    if (!j.contains("generators")) fail(where, "missing \"generators\"");
    gens = &j["generators"];
    at += ".generators";
  }
  if (!gens->is_array()) fail(at, "expected a name or a list of generators");
  std::vector<Permutation> perms;
  for (std::size_t k = 0; k < gens->size(); ++k)
    perms.push_back(json_io::parse_permutation((*gens)[k], n, at + "[" + std::to_string(k) + "]"));
  return PermGroup::closure(n, std::move(perms));
}

Problem parse_problem(const json& j, const std::string& source, const Overrides& overrides) {
  if (!j.is_object()) fail(source, "top level must be an object");
  reject_unknown(j, {"n", "group", "representation", "H", "A", "u", "options", "description"}, source);
  Problem p;
  p.source = source;

  if (!j.contains("n") || !j["n"].is_number_integer()) fail(source + ".n", "expected an integer");
  p.n = j["n"].get<int>();
  if (p.n < 1 || p.n > 8) fail(source + ".n", "degree must lie in 1..8");
  const auto n = static_cast<std::size_t>(p.n);

  const json group_json = j.contains("group") ? j["group"] : json("Sn");
  p.group = parse_group(group_json, p.n, source + ".group");
  p.group_label = group_json.is_string() ? label_for(group_json.get<std::string>(), p.n) : "generated";

  if (!j.contains("representation")) fail(source, "missing \"representation\"");
  p.rep = json_io::parse_rep(j["representation"], p.group, source + ".representation");

  const bool has_h = j.contains("H");
  if (has_h == j.contains("A")) fail(source, "give exactly one of \"H\" and \"A\"");
  if (has_h) {
    p.h = json_io::parse_matrix(j["H"], source + ".H");
    if (p.h.rows() != n || p.h.cols() != n) fail(source + ".H", "expected " + std::to_string(n) + "x" + std::to_string(n));
  } else {
    p.a = json_io::parse_matrix(j["A"], source + ".A");
    if (p.a->rows() != n || p.a->cols() != n) fail(source + ".A", "expected " + std::to_string(n) + "x" + std::to_string(n));
    p.h = ab_star(*p.a, *p.a);
  }

  if (j.contains("u")) {
    p.u = json_io::parse_vector(j["u"], source + ".u");
    if (p.u->size() != p.rep.dim())
      fail(source + ".u", "length " + std::to_string(p.u->size()) + " differs from representation degree " +
                              std::to_string(p.rep.dim()));
  }

  if (j.contains("options")) {
    const auto& o = j["options"];
    const std::string at = source + ".options";
    if (!o.is_object()) fail(at, "expected an object");
    reject_unknown(o, {"tol_zero", "tol_eq", "normalize_u"}, at);
    if (o.contains("tol_zero")) p.tol.zero = positive_number(o["tol_zero"], at + ".tol_zero");
    if (o.contains("tol_eq")) p.tol.eq = positive_number(o["tol_eq"], at + ".tol_eq");
    if (o.contains("normalize_u")) {
      if (!o["normalize_u"].is_boolean()) fail(at + ".normalize_u", "expected a boolean");
      p.normalize_u = o["normalize_u"].get<bool>();
    }
  }
  if (overrides.tol_zero) p.tol.zero = *overrides.tol_zero;
  if (overrides.tol_eq) p.tol.eq = *overrides.tol_eq;
  p.normalize_u = p.normalize_u || overrides.normalize_u;
  return p;
}

Problem load_problem(const std::string& path, const Overrides& overrides) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (const auto pos = msg.find("parse error"); pos != std::string::npos) msg = msg.substr(pos);
    fail(path, msg);
  }
  return parse_problem(j, path, overrides);
}

CVector resolve_u(const Problem& p, const CMatrix& m_h) {
  if (!p.u) return herm_eig(m_h).column(0);
  CVector u = *p.u;
  if (p.normalize_u) {
    const double nrm = norm2(u);
    if (!(nrm > 0.0) || !std::isfinite(nrm)) throw Error(ErrorKind::NotUnit, "u is zero and cannot be normalized");
    for (auto& z : u) z /= nrm;
  }
  return u;
}

}  // namespace schur::cli
