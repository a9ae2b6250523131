#include "schur/compat.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "schur/cxlinalg.hpp"
#include "schur/error.hpp"

namespace schur {

std::size_t MultiIndex::encode() const {
  const auto n = values.size();
  std::size_t code = 0;
  for (std::size_t i = n; i-- > 0;) code = code * n + static_cast<std::size_t>(values[i]);
  return code;
}

MultiIndex MultiIndex::decode(std::size_t code, int n) {
  MultiIndex out;
  out.values.resize(static_cast<std::size_t>(n));
  for (auto& v : out.values) {
    v = static_cast<int>(code % static_cast<std::size_t>(n));
    code /= static_cast<std::size_t>(n);
  }
  return out;
}

MultiIndex MultiIndex::identity(int n) {
  MultiIndex out;
  for (int i = 0; i < n; ++i) out.values.push_back(i);
  return out;
}

MultiIndex MultiIndex::from_one_based(const std::vector<int>& values) {
  MultiIndex out;
  const int n = static_cast<int>(values.size());
  for (int v : values) {
    if (v < 1 || v > n) throw Error(ErrorKind::ParseError, "multi-index value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    out.values.push_back(v - 1);
  }
  return out;
}

std::vector<int> MultiIndex::one_based() const {
  std::vector<int> out;
  for (int v : values) out.push_back(v + 1);
  return out;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i] + 1;
  os << ')';
  return os.str();
}

MultiIndex SpikeFunction::as_multi_index(int n) const {
  auto alpha = MultiIndex::identity(n);
  alpha.values[static_cast<std::size_t>(r)] = c;
  return alpha;
}

namespace {

void extend(const MultiIndex& alpha, std::vector<int>& images, std::vector<bool>& used, std::vector<Permutation>& out) {
  const int n = alpha.size();
  const int i = static_cast<int>(images.size());
  if (i == n) {
    out.emplace_back(images);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (used[static_cast<std::size_t>(v)] || alpha(v) < i) continue;
    used[static_cast<std::size_t>(v)] = true;
    images.push_back(v);
    extend(alpha, images, used, out);
    images.pop_back();
    used[static_cast<std::size_t>(v)] = false;
  }
}

}  // namespace

std::vector<Permutation> compatible(const MultiIndex& alpha) {
  const int n = alpha.size();
  if (n > kCompatMaxN) throw Error(ErrorKind::TooLarge, "compatible permutations limited to n <= 8");
  for (int v : alpha.values)
    if (v < 0 || v >= n) throw Error(ErrorKind::BadIndices, "multi-index value out of range");
  std::vector<Permutation> out;
  std::vector<int> images;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  extend(alpha, images, used, out);
  return out;
}

std::vector<Permutation> compatible_spike(int n, int r, int c) {
  if (n > kCompatMaxN) throw Error(ErrorKind::TooLarge, "compatible permutations limited to n <= 8");
  if (r < 0 || c >= n || r >= c)
    throw Error(ErrorKind::BadIndices, "spike needs 1 <= r < c <= n, got r=" + std::to_string(r + 1) +
                                           " c=" + std::to_string(c + 1));
  const int width = c - r;
  std::vector<Permutation> out{Permutation::identity(n)};
  for (unsigned mask = 1; mask < (1u << width); ++mask) {
    std::vector<int> cycle{r};
    for (int b = 0; b < width; ++b)
      if (mask & (1u << b)) cycle.push_back(r + 1 + b);
    auto img = Permutation::identity(n).images();
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    out.emplace_back(std::move(img));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> restricted_compatible(const MultiIndex& alpha, const CMatrix& a, double zero_tol) {
  if (!a.is_square() || static_cast<int>(a.rows()) != alpha.size())
    throw Error(ErrorKind::ShapeMismatch, "A must be n x n for a multi-index of length n");
  const double cutoff = zero_tol * a.max_abs();
  auto out = compatible(alpha);
  std::erase_if(out, [&](const Permutation& s) {
    for (int i = 0; i < alpha.size(); ++i)
      if (!(std::abs(a(static_cast<std::size_t>(i), static_cast<std::size_t>(alpha(s(i))))) > cutoff)) return true;
    return false;
  });
  return out;
}

std::optional<SpikeFunction> max_row_spike(const CMatrix& a, int c, double zero_tol) {
  if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "max_row_spike needs a square matrix");
  const int n = static_cast<int>(a.rows());
  if (c < 1 || c >= n) throw Error(ErrorKind::BadIndices, "column must satisfy 1 < c <= n, got c=" + std::to_string(c + 1));
  if (!is_upper_triangular(a, zero_tol)) throw Error(ErrorKind::PreconditionViolated, "A is not upper triangular");
  const double cutoff = zero_tol * a.max_abs();
  for (int r = c - 1; r >= 0; --r)
    if (std::abs(a(static_cast<std::size_t>(r), static_cast<std::size_t>(c))) > cutoff) return SpikeFunction{r, c};
  return std::nullopt;
}

std::vector<GammaPair> gamma_np(int n, int p) {
  if (n < 1 || p < 0 || p >= n) throw Error(ErrorKind::BadIndices, "gamma_np needs 1 <= p <= n");
  const int k = n - 1;
  std::size_t count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<std::size_t>(k);
  std::vector<GammaPair> out;
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    GammaPair pair;
    pair.restricted = k == 0 ? MultiIndex{} : MultiIndex::decode(code, k);
    pair.gamma.values.assign(static_cast<std::size_t>(n), p);
    for (int i = 0; i < n; ++i) {
      if (i == p) continue;
      const int v = pair.restricted(i < p ? i : i - 1);
      pair.gamma.values[static_cast<std::size_t>(i)] = v < p ? v : v + 1;
    }
    out.push_back(std::move(pair));
  }
  return out;
}

}  // namespace schur
