#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace schur {

/// A function alpha: {0..n-1} -> {0..n-1}, stored as its value list.
struct MultiIndex {
  std::vector<int> values;

  int size() const noexcept { return static_cast<int>(values.size()); }
  int operator()(int i) const { return values[static_cast<std::size_t>(i)]; }

  /// sum_i alpha(i) * n^i
  std::size_t encode() const;
  static MultiIndex decode(std::size_t code, int n);
  static MultiIndex identity(int n);
  /// Parses 1-based values, e.g. {2,2,3}; throws ParseError on range errors.
  static MultiIndex from_one_based(const std::vector<int>& values);

  std::vector<int> one_based() const;
  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

}  // namespace schur
