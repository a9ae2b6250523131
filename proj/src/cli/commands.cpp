#include "schur/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "schur/cli/problem.hpp"
#include "schur/compat.hpp"
#include "schur/cxlinalg.hpp"
#include "schur/error.hpp"
#include "schur/genmatfn.hpp"
#include "schur/json_io.hpp"
#include "schur/random.hpp"
#include "schur/tensorlab.hpp"

namespace schur::cli {

using nlohmann::json;

namespace {

struct Settings {
  Overrides overrides;
  std::uint64_t seed = 1;
  bool json_out = false;
};

// Residual bound for the oracle's algebraic identities.
constexpr double kOracleBound = 1e-8;

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

std::string fmt(cplx z) {
  if (z.imag() == 0.0) return fmt(z.real());
  if (z.real() == 0.0) return fmt(z.imag()) + "i";
  std::ostringstream os;
  os << std::setprecision(6) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

void print_matrix(std::ostream& out, const std::string& label, const CMatrix& m) {
  out << label << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << fmt(m(i, j));
    out << "]\n";
  }
}

void print_vector(std::ostream& out, const std::string& label, std::span<const cplx> v) {
  out << label << ": (";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << fmt(v[i]);
  out << ")\n";
}

std::string transposition_list(const SupportGroup& s) {
  if (s.transpositions.empty()) return "none";
  std::string text;
  for (const auto& [i, j] : s.transpositions) text += "(" + std::to_string(i + 1) + " " + std::to_string(j + 1) + ")";
  return text;
}

json support_json(const SupportGroup& s) {
  json gens = json::array();
  for (const auto& [i, j] : s.transpositions) gens.push_back({i + 1, j + 1});
  return {{"transpositions", gens}, {"order", s.group.order()}};
}

json problem_json(const Problem& p) {
  json gens = json::array();
  for (const auto& s : p.group.generators()) gens.push_back(json_io::to_json(s));
  return {
      {"source", p.source},
      {"n", p.n},
      {"group", {{"label", p.group_label}, {"order", p.group.order()}, {"generators", gens}}},
      {"representation", {{"name", p.rep.name()}, {"degree", p.rep.dim()}}},
  };
}

void print_header(std::ostream& out, const Problem& p) {
  out << "problem: " << p.source << "\n"
      << "group: " << p.group_label << " (order " << p.group.order() << ", degree " << p.n << ")\n"
      << "representation: " << p.rep.name() << " (degree " << p.rep.dim() << ")\n";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_check(const std::string& file, const Settings& s, std::ostream& out) {
  const Problem p = load_problem(file, s.overrides);
  const CMatrix m_h = gmf(p.h, p.group, p.rep, {}, p.tol);
  const CVector u = resolve_u(p, m_h);
  const auto eig = herm_eig(m_h, p.tol.linalg);
  const SchurReport r = schur_check(p.h, p.group, p.rep, u, p.tol);

  if (s.json_out) {
    json j = problem_json(p);
    j["command"] = "check";
    j["u"] = json_io::to_json(std::span<const cplx>(u));
    j["u_source"] = p.u ? "file" : "lambda_min";
    j["eigenvalues_M_H"] = eig.values;
    j["support_H"] = support_json(r.diagnosis.support);
    j["report"] = json_io::to_json(r);
    out << j.dump() << "\n";
    return kExitOk;
  }
  print_header(out, p);
  out << "det(H) = " << fmt(r.det_h) << "\n";
  print_matrix(out, "M_H", r.m_h);
  out << "eigenvalues of M_H:";
  for (double v : eig.values) out << " " << fmt(v);
  out << "\n";
  print_vector(out, p.u ? "u" : "u (lambda_min eigenvector)", u);
  out << "(M_H u, u) = " << fmt(r.value) << "\n"
      << "gap = " << fmt(r.gap) << "\n"
      << "equality: " << yes_no(r.equality) << "\n"
      << "support group of H: generated by " << transposition_list(r.diagnosis.support) << ", order "
      << r.diagnosis.support.group.order() << "\n"
      << "support group inside G: " << yes_no(r.diagnosis.gh_subset_g) << "\n"
      << "sign condition on support group: " << yes_no(r.diagnosis.sign_condition) << " (" << r.diagnosis.checked_elements
      << " elements checked)\n";
  if (r.diagnosis.witness) out << "witness: " << r.diagnosis.witness->to_cycle_string() << "\n";
  return kExitOk;
}

int cmd_oracle(const std::string& file, const Settings& s, std::ostream& out) {
  const Problem p = load_problem(file, s.overrides);
  if (p.n > tensor_max_n())
    throw Error(ErrorKind::TooLarge, "oracle tensors need n <= " + std::to_string(tensor_max_n()) +
                                         " (SCHUR_TENSOR_MAX_N raises the cap)");
  const CMatrix m_h = gmf(p.h, p.group, p.rep, {}, p.tol);
  const CVector u = resolve_u(p, m_h);
  const CMatrix a = upper_cholesky(p.h, p.tol.pd, p.tol.linalg);
  const auto g = static_cast<double>(p.group.order());
  const auto n = static_cast<std::size_t>(p.n);

  Rng rng(s.seed);
  const CMatrix b = random_matrix(n, n, rng);
  const CVector u2 = random_unit(p.rep.dim(), rng);

  const TensorVector x = symmetrize(p.rep, u, a);
  const TensorVector y = symmetrize(p.rep, u2, b);
  const cplx marcus_lhs = inner(x, y);
  const cplx marcus_rhs = g * quadratic_form(gmf(ab_star(a, b), p.group, p.rep, {}, p.tol), u, u2);
  const double marcus = std::abs(marcus_lhs - marcus_rhs) / (1.0 + std::abs(marcus_lhs) + std::abs(marcus_rhs));

  TensorVector v(p.rep.dim(), p.n), w(p.rep.dim(), p.n);
  for (auto& z : v.coeffs()) z = random_complex(rng);
  for (auto& z : w.coeffs()) z = random_complex(rng);
  const TensorVector tv = apply_symmetry(p.rep, v);
  TensorVector idem = apply_symmetry(p.rep, tv);
  TensorVector gtv = tv;
  gtv *= g;
  idem -= gtv;
  const double idempotent = idem.norm() / std::max(1.0, gtv.norm());
  const TensorVector tw = apply_symmetry(p.rep, w);
  const double adjoint =
      std::abs(inner(tv, w) - inner(v, tw)) / std::max(1.0, tv.norm() * w.norm());

  const EqualityChain chain = equality_chain_report(p.h, p.group, p.rep, u, p.tol);
  const bool residuals_ok = marcus <= kOracleBound && idempotent <= kOracleBound && adjoint <= kOracleBound;
  const bool ok = residuals_ok && chain.all_agree();

  if (s.json_out) {
    json j = problem_json(p);
    j["command"] = "oracle";
    j["seed"] = s.seed;
    j["u"] = json_io::to_json(std::span<const cplx>(u));
    j["u_source"] = p.u ? "file" : "lambda_min";
    j["residuals"] = {{"marcus_identity", marcus}, {"idempotent", idempotent}, {"self_adjoint", adjoint}};
    j["residual_bound"] = kOracleBound;
    j["chain"] = json_io::to_json(chain);
    j["consistent"] = ok;
    out << j.dump() << "\n";
  } else {
    static constexpr const char* kNames[6] = {
        "T_G(u x x) = k T_G(u x e), k != 0", "Cauchy-Schwarz equality", "det(H) = (M_H u, u)",
        "|det A|^2 = (M_AA* u, u)",          "support of H: inside G, signs match",
        "support of A: inside G, signs match"};
    print_header(out, p);
    print_vector(out, p.u ? "u" : "u (lambda_min eigenvector)", u);
    out << "seed: " << s.seed << "\n"
        << "residual marcus identity: " << fmt(marcus) << "\n"
        << "residual T_G^2 = g T_G: " << fmt(idempotent) << "\n"
        << "residual T_G* = T_G: " << fmt(adjoint) << "\n";
    for (std::size_t k = 0; k < 6; ++k) out << "condition " << k + 1 << " (" << kNames[k] << "): " << yes_no(chain.conditions[k]) << "\n";
    if (chain.k) out << "k = " << fmt(*chain.k) << "\n";
    out << "consistent: " << yes_no(ok) << "\n";
  }
  return ok ? kExitOk : kExitInternal;
}

json perm_list(const std::vector<Permutation>& perms) {
  json list = json::array();
  for (const auto& s : perms) list.push_back(json_io::to_json(s));
  return {{"count", perms.size()}, {"permutations", list}};
}

int cmd_compat(int n, const std::vector<int>& alpha_in, const std::vector<int>& spike, const std::string& file,
               const Settings& s, std::ostream& out) {
  std::optional<CMatrix> a;
  if (!file.empty()) {
    const Problem p = load_problem(file, s.overrides);
    if (n == 0) n = p.n;
    if (p.n != n) throw Error(ErrorKind::PreconditionViolated, "--n differs from the problem file degree");
    a = p.a && is_upper_triangular(*p.a, p.tol.zero) ? *p.a : upper_cholesky(p.h, p.tol.pd, p.tol.linalg);
  }
  if (n == 0) n = !alpha_in.empty() ? static_cast<int>(alpha_in.size()) : 0;
  if (n < 1 || n > kCompatMaxN) throw Error(ErrorKind::BadIndices, "n must lie in 1..8");
  if (alpha_in.empty() == spike.empty()) throw Error(ErrorKind::BadIndices, "give exactly one of --alpha and --spike");

  MultiIndex alpha;
  std::vector<Permutation> perms;
  if (!spike.empty()) {
    if (spike.size() != 2) throw Error(ErrorKind::BadIndices, "--spike takes r c");
    perms = compatible_spike(n, spike[0] - 1, spike[1] - 1);
    alpha = SpikeFunction{spike[0] - 1, spike[1] - 1}.as_multi_index(n);
  } else {
    if (static_cast<int>(alpha_in.size()) != n) throw Error(ErrorKind::BadIndices, "--alpha needs n values");
    for (int v : alpha_in)
      if (v < 1 || v > n) throw Error(ErrorKind::BadIndices, "alpha values must lie in 1..n");
    alpha = MultiIndex::from_one_based(alpha_in);
    perms = compatible(alpha);
  }
  std::optional<std::vector<Permutation>> restricted;
  if (a) restricted = restricted_compatible(alpha, *a, kDefaultTolerances.zero);

  if (s.json_out) {
    json j = {{"command", "compat"}, {"n", n}, {"alpha", alpha.one_based()}, {"compatible", perm_list(perms)}};
    if (!spike.empty()) j["spike"] = {{"r", spike[0]}, {"c", spike[1]}, {"closed_form_count", 1u << (spike[1] - spike[0])}};
    if (a) {
      j["A"] = json_io::to_json(*a);
      j["restricted"] = perm_list(*restricted);
    }
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "alpha: " << alpha.to_string() << "\n";
  if (!spike.empty()) out << "spike: r=" << spike[0] << " c=" << spike[1] << ", closed form 2^(c-r) = " << (1u << (spike[1] - spike[0])) << "\n";
  out << "compatible permutations (" << perms.size() << "):";
  for (const auto& p : perms) out << " " << p.to_cycle_string();
  out << "\n";
  if (a) {
    print_matrix(out, "A", *a);
    out << "restricted to nonzero products of A (" << restricted->size() << "):";
    for (const auto& p : *restricted) out << " " << p.to_cycle_string();
    out << "\n";
  }
  return kExitOk;
}

int cmd_trace(const std::string& file, const Settings& s, std::ostream& out) {
  const Problem p = load_problem(file, s.overrides);
  const TraceReport r = trace_report(p.h, p.group, p.rep, p.tol);
  if (s.json_out) {
    json j = problem_json(p);
    j["command"] = "trace";
    j["report"] = json_io::to_json(r);
    out << j.dump() << "\n";
    return kExitOk;
  }
  print_header(out, p);
  out << "m det(H) = " << fmt(r.m_det) << "\n"
      << "Tr(M_H) = " << fmt(r.trace) << "\n"
      << "equality: " << yes_no(r.equality) << "\n"
      << "M_H scalar (= det(H) I): " << yes_no(r.is_scalar) << "\n";
  return kExitOk;
}

int cmd_factor(const std::string& file, const Settings& s, std::ostream& out) {
  const Problem p = load_problem(file, s.overrides);
  const CMatrix a = upper_cholesky(p.h, p.tol.pd, p.tol.linalg);
  const SupportGroup ga = support_group(a, p.tol.zero);
  const SupportGroup gh = support_group(p.h, p.tol.zero);
  const double residual = max_abs_diff(ab_star(a, a), p.h);
  if (s.json_out) {
    json j = problem_json(p);
    j["command"] = "factor";
    j["A"] = json_io::to_json(a);
    j["residual"] = residual;
    j["support_A"] = support_json(ga);
    j["support_H"] = support_json(gh);
    j["support_groups_equal"] = ga.group == gh.group;
    out << j.dump() << "\n";
    return kExitOk;
  }
  print_header(out, p);
  print_matrix(out, "A (upper triangular, H = A A*)", a);
  out << "max |A A* - H| = " << fmt(residual) << "\n"
      << "support group of A: generated by " << transposition_list(ga) << ", order " << ga.group.order() << "\n"
      << "support group of H: generated by " << transposition_list(gh) << ", order " << gh.group.order() << "\n"
      << "same group: " << yes_no(ga.group == gh.group) << "\n";
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
      return kExitParse;
    case ErrorKind::InternalError:
      return kExitInternal;
    default:
      return kExitPrecondition;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur generalized matrix functions: inequality checks and tensor oracle", "schur"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  double tol_zero = 0.0, tol_eq = 0.0;
  auto* opt_zero = app.add_option("--tol-zero", tol_zero, "relative threshold below which entries count as zero")
                       ->check(CLI::PositiveNumber);
  auto* opt_eq = app.add_option("--tol-eq", tol_eq, "equality tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", s.seed, "seed for randomized probes");
  app.add_flag("--normalize-u", s.overrides.normalize_u, "rescale u to unit length instead of rejecting it");
  auto* json_flag = app.add_flag("--json", s.json_out, "emit JSON");
  bool pretty = false;
  app.add_flag("--pretty", pretty, "emit human-readable text (default)")->excludes(json_flag);

  std::string file;
  auto* check = app.add_subcommand("check", "Schur inequality report");
  check->add_option("file", file, "problem file")->required();
  auto* oracle = app.add_subcommand("oracle", "tensor oracle residuals and the six equality conditions");
  oracle->add_option("file", file, "problem file")->required();
  auto* trace = app.add_subcommand("trace", "m det(H) against Tr(M_H)");
  trace->add_option("file", file, "problem file")->required();
  auto* factor = app.add_subcommand("factor", "upper triangular factor and support groups");
  factor->add_option("file", file, "problem file")->required();

  int n = 0;
  std::vector<int> alpha, spike;
  auto* compat = app.add_subcommand("compat", "alpha-compatible permutations");
  compat->add_option("--n", n, "degree");
  compat->add_option("--alpha", alpha, "function values alpha(1) .. alpha(n)")->delimiter(',');
  compat->add_option("--spike", spike, "spike r c")->expected(2)->allow_extra_args(false);
  compat->add_option("file", file, "problem file supplying A (or H, factored)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }
  if (opt_zero->count()) s.overrides.tol_zero = tol_zero;
  if (opt_eq->count()) s.overrides.tol_eq = tol_eq;

  try {
    if (*check) return cmd_check(file, s, out);
    if (*oracle) return cmd_oracle(file, s, out);
    if (*trace) return cmd_trace(file, s, out);
    if (*factor) return cmd_factor(file, s, out);
    if (*compat) return cmd_compat(n, alpha, spike, file, s, out);
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    err << "error: " << e.what() << "\n";
    if (s.json_out)
      out << json{{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}, {"exit_code", code}}}}.dump() << "\n";
    return code;
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: InternalError: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace schur::cli
