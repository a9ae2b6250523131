#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schur/cmatrix.hpp"
#include "schur/permgroup.hpp"
#include "schur/tolerances.hpp"

namespace schur {

/// Unitary representation of a permutation group, stored as a full table
/// indexed like group().elements().
class UnitaryRep {
 public:
  UnitaryRep() = default;

  /// Catalog: "trivial", "sign", "sign_plus_trivial", "natural_permutation",
  /// "s3_standard_2d" (degree-3 groups only).
  static UnitaryRep builtin(std::string_view name, const PermGroup& g);

  /// Extends generator images to all of g along words in the generators.
  /// Throws InconsistentHomomorphism when two words for one element disagree
  /// by more than tol.word, and NotUnitary on a non-unitary image.
  static UnitaryRep from_generator_images(const PermGroup& g,
                                          const std::vector<std::pair<Permutation, CMatrix>>& images,
                                          const Tolerances& tol = kDefaultTolerances);

  /// Table built from explicit matrices for every element; validated.
  static UnitaryRep from_table(const PermGroup& g, std::vector<CMatrix> table, std::string name,
                               const Tolerances& tol = kDefaultTolerances);

  /// Same matrices on a subgroup of group().
  UnitaryRep restrict_to(const PermGroup& subgroup) const;

  /// Representation of restrict(stabilizer(group(), p), p): each restricted
  /// element keeps the matrix of the element it came from.
  UnitaryRep restrict_to_stabilizer(int p) const;

  const PermGroup& group() const noexcept { return group_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::string& name() const noexcept { return name_; }

  /// Throws NotInGroup.
  const CMatrix& evaluate(const Permutation& s) const;
  const CMatrix& at(std::size_t element_index) const { return table_[element_index]; }
  const std::vector<CMatrix>& table() const noexcept { return table_; }

  /// Largest ||M(s)M(x) - M(sx)|| over all element pairs.
  double homomorphism_defect() const;

 private:
  void validate(const Tolerances& tol) const;

  PermGroup group_;
  std::size_t dim_ = 0;
  std::string name_;
  std::vector<CMatrix> table_;
};

/// Both groups have the same degree and element set.
bool same_group(const PermGroup& a, const PermGroup& b);

}  // namespace schur
