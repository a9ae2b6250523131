#include "schur/repcat.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>

#include "schur/error.hpp"

namespace schur {

namespace {

CMatrix s3_standard_2d_matrix(const Permutation& s) {
  const double h = 0.5;
  const double r = std::sqrt(3.0) / 2.0;
  const auto one_line = s.one_line();
  // Keys are one-line images; (1 2 3) sends 1->2, 2->3, 3->1.
  if (one_line == std::vector<int>{1, 2, 3}) return {{1.0, 0.0}, {0.0, 1.0}};
  if (one_line == std::vector<int>{2, 3, 1}) return {{-h, r}, {-r, -h}};   // (1 2 3)
  if (one_line == std::vector<int>{3, 1, 2}) return {{-h, -r}, {r, -h}};   // (1 3 2)
  if (one_line == std::vector<int>{1, 3, 2}) return {{-h, r}, {r, h}};     // (2 3)
  if (one_line == std::vector<int>{3, 2, 1}) return {{-h, -r}, {-r, h}};   // (1 3)
  return {{1.0, 0.0}, {0.0, -1.0}};                                        // (1 2)
}

double unitarity_defect(const CMatrix& m) {
  return max_abs_diff(m * m.adjoint(), CMatrix::identity(m.rows()));
}

}  // namespace

bool same_group(const PermGroup& a, const PermGroup& b) { return a == b; }

UnitaryRep UnitaryRep::builtin(std::string_view name, const PermGroup& g) {
  std::vector<CMatrix> table;
  table.reserve(g.order());
  const auto n = static_cast<std::size_t>(g.degree());
  if (name == "trivial") {
    for (std::size_t k = 0; k < g.order(); ++k) table.push_back(CMatrix::identity(1));
  } else if (name == "sign") {
    for (const auto& s : g.elements()) table.push_back(CMatrix{{double(s.sign())}});
  } else if (name == "sign_plus_trivial") {
    for (const auto& s : g.elements()) table.push_back(CMatrix{{double(s.sign()), 0.0}, {0.0, 1.0}});
  } else if (name == "natural_permutation") {
    for (const auto& s : g.elements()) {
      CMatrix p(n, n);
      for (int i = 0; i < g.degree(); ++i) p(static_cast<std::size_t>(s(i)), static_cast<std::size_t>(i)) = 1.0;
      table.push_back(std::move(p));
    }
  } else if (name == "s3_standard_2d") {
    if (g.degree() != 3)
      throw Error(ErrorKind::IncompatibleGroup, "s3_standard_2d needs a subgroup of S3, got degree " + std::to_string(g.degree()));
    for (const auto& s : g.elements()) table.push_back(s3_standard_2d_matrix(s));
  } else {
    throw Error(ErrorKind::UnknownName, "no built-in representation named \"" + std::string(name) + "\"");
  }
  return from_table(g, std::move(table), std::string(name));
}

UnitaryRep UnitaryRep::from_generator_images(const PermGroup& g,
                                             const std::vector<std::pair<Permutation, CMatrix>>& images,
                                             const Tolerances& tol) {
  if (images.empty() && g.order() > 1)
    throw Error(ErrorKind::IncompatibleGroup, "no generator images for a nontrivial group");
  std::size_t m = images.empty() ? 1 : images.front().second.rows();
  for (const auto& [s, mat] : images) {
    if (s.degree() != g.degree()) throw Error(ErrorKind::DegreeMismatch, "generator image keyed by wrong degree");
    if (!g.contains(s)) throw Error(ErrorKind::NotInGroup, s.to_cycle_string() + " is not in the group");
    if (mat.rows() != m || mat.cols() != m) throw Error(ErrorKind::ShapeMismatch, "generator images differ in size");
    if (!mat.all_finite() || unitarity_defect(mat) > tol.linalg)
      throw Error(ErrorKind::NotUnitary, "image of " + s.to_cycle_string() + " is not unitary");
  }

  std::vector<std::optional<CMatrix>> found(g.order());
  found[g.index_of(Permutation::identity(g.degree()))] = CMatrix::identity(m);
  std::deque<std::size_t> queue{g.index_of(Permutation::identity(g.degree()))};
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    const Permutation& x = g.elements()[at];
    for (const auto& [s, mat] : images) {
      const std::size_t next = g.index_of(s * x);
      CMatrix word = mat * *found[at];
      if (!found[next]) {
        found[next] = std::move(word);
        queue.push_back(next);
        continue;
      }
      const double gap = max_abs_diff(word, *found[next]);
      if (gap > tol.word)
        throw Error(ErrorKind::InconsistentHomomorphism,
                    "two words for " + g.elements()[next].to_cycle_string() + " differ by " + std::to_string(gap));
    }
  }

  std::vector<CMatrix> table;
  table.reserve(g.order());
  for (std::size_t k = 0; k < g.order(); ++k) {
    if (!found[k])
      throw Error(ErrorKind::IncompatibleGroup,
                  "images do not generate the group; " + g.elements()[k].to_cycle_string() + " unreached");
    table.push_back(std::move(*found[k]));
  }
  return from_table(g, std::move(table), "images", tol);
}

UnitaryRep UnitaryRep::from_table(const PermGroup& g, std::vector<CMatrix> table, std::string name,
                                  const Tolerances& tol) {
  if (table.size() != g.order()) throw Error(ErrorKind::ShapeMismatch, "table size differs from group order");
  UnitaryRep rep;
  rep.group_ = g;
  rep.dim_ = table.empty() ? 0 : table.front().rows();
  rep.name_ = std::move(name);
  rep.table_ = std::move(table);
  rep.validate(tol);
  return rep;
}

void UnitaryRep::validate(const Tolerances& tol) const {
  for (std::size_t k = 0; k < table_.size(); ++k) {
    const auto& mat = table_[k];
    if (mat.rows() != dim_ || mat.cols() != dim_) throw Error(ErrorKind::ShapeMismatch, "table matrices differ in size");
    if (!mat.all_finite() || unitarity_defect(mat) > tol.linalg)
      throw Error(ErrorKind::NotUnitary, "M" + group_.elements()[k].to_cycle_string() + " is not unitary");
  }
  const Permutation id = Permutation::identity(group_.degree());
  if (max_abs_diff(evaluate(id), CMatrix::identity(dim_)) > tol.linalg)
    throw Error(ErrorKind::InconsistentHomomorphism, "M(identity) is not the identity");
  // M(s)M(x) = M(sx) for every generator s and every x forces the full
  // homomorphism property by induction on word length.
  const auto& gens = group_.generators().empty() ? group_.elements() : group_.generators();
  for (const auto& s : gens) {
    const CMatrix& ms = evaluate(s);
    for (std::size_t k = 0; k < table_.size(); ++k) {
      const double gap = max_abs_diff(ms * table_[k], evaluate(s * group_.elements()[k]));
      if (gap > tol.linalg)
        throw Error(ErrorKind::InconsistentHomomorphism,
                    "M" + s.to_cycle_string() + " M" + group_.elements()[k].to_cycle_string() + " differs from the product by " +
                        std::to_string(gap));
    }
  }
}

UnitaryRep UnitaryRep::restrict_to(const PermGroup& subgroup) const {
  if (subgroup.degree() != group_.degree()) throw Error(ErrorKind::DegreeMismatch, "restrict_to degree");
  std::vector<CMatrix> table;
  table.reserve(subgroup.order());
  for (const auto& s : subgroup.elements()) table.push_back(evaluate(s));
  UnitaryRep rep;
  rep.group_ = subgroup;
  rep.dim_ = dim_;
  rep.name_ = name_;
  rep.table_ = std::move(table);
  return rep;
}

UnitaryRep UnitaryRep::restrict_to_stabilizer(int p) const {
  const PermGroup fixing = stabilizer(group_, p);
  UnitaryRep rep;
  rep.group_ = restrict(fixing, p);
  rep.dim_ = dim_;
  rep.name_ = name_;
  rep.table_.reserve(rep.group_.order());
  for (const auto& s : rep.group_.elements()) rep.table_.push_back(evaluate(extend_permutation(s, p)));
  return rep;
}

const CMatrix& UnitaryRep::evaluate(const Permutation& s) const { return table_[group_.index_of(s)]; }

double UnitaryRep::homomorphism_defect() const {
  double worst = 0.0;
  for (std::size_t a = 0; a < table_.size(); ++a)
    for (std::size_t b = 0; b < table_.size(); ++b) {
      const auto& sa = group_.elements()[a];
      const auto& sb = group_.elements()[b];
      worst = std::max(worst, max_abs_diff(table_[a] * table_[b], evaluate(sa * sb)));
    }
  return worst;
}

}  // namespace schur
