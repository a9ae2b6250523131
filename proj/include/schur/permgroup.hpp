#pragma once

// Permutations of {0..n-1} and explicitly enumerated subgroups of S_n.
//
// Internally every index is 0-based. Text and JSON forms are 1-based:
// one-line notation [2,1,3] and cycle notation "(1 2)(3 4)".

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schur/cmatrix.hpp"
#include "schur/tolerances.hpp"

namespace schur {

class Permutation {
 public:
  Permutation() = default;
  /// Takes 0-based images; throws PreconditionViolated unless a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  static Permutation from_one_based(const std::vector<int>& images);
  /// Parses "(1 2)(3 4)", "(1,2)", "()" or "e"; 1-based labels.
  static Permutation parse_cycles(int n, std::string_view text);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;
  /// Nontrivial cycles, each starting at its smallest element.
  std::vector<std::vector<int>> cycles() const;

  std::vector<int> one_line() const;
  std::string to_cycle_string() const;

  /// (a * b)(i) = a(b(i)): b acts first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Finite subgroup of S_n held as a sorted element list plus generators.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultCap = 40320;

  PermGroup() = default;

  /// Smallest subgroup containing gens. Throws ClosureCapExceeded when the
  /// closure grows past cap elements.
  static PermGroup closure(int n, std::vector<Permutation> gens, std::size_t cap = kDefaultCap);
  static PermGroup trivial(int n);
  static PermGroup symmetric(int n);
  static PermGroup alternating(int n);

  int degree() const noexcept { return n_; }
  std::size_t order() const noexcept { return elements_.size(); }
  /// Lexicographic on one-line notation; the identity is always first.
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  bool contains(const Permutation& p) const;
  /// Position in elements(); throws NotInGroup.
  std::size_t index_of(const Permutation& p) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }

 private:
  int n_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

/// Group generated by elements, with a short generating set picked
/// greedily. Intended for element lists already known to be closed.
PermGroup subgroup_from_elements(int n, const std::vector<Permutation>& elements);

/// Transposition-generated group of a matrix's off-diagonal support.
struct SupportGroup {
  PermGroup group;
  /// 0-based pairs (i, j), i < j, that generate group.
  std::vector<std::pair<int, int>> transpositions;
};

/// Support is the set of unordered pairs {i, j} with either entry nonzero.
SupportGroup support_group(const CMatrix& d, double zero_tol = kDefaultTolerances.zero);

/// Connected components of the action, each sorted, ordered by smallest element.
std::vector<std::vector<int>> orbits(const PermGroup& g);

PermGroup stabilizer(const PermGroup& g, int p);

/// Drops point p and relabels {0..n-1}\{p} order-preservingly onto {0..n-2}.
Permutation restrict_permutation(const Permutation& s, int p);
/// Inverse of restrict_permutation: reinserts p as a fixed point.
Permutation extend_permutation(const Permutation& s, int p);

/// Throws NotFixing if some element moves p.
PermGroup restrict(const PermGroup& g, int p);

/// Membership test on every element of h.
bool is_subgroup(const PermGroup& h, const PermGroup& g);
/// Membership test on the generators of h only.
bool is_subgroup_by_generators(const PermGroup& h, const PermGroup& g);

}  // namespace schur
