#include "schur/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "schur/error.hpp"

namespace schur {

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& px = parent_[static_cast<std::size_t>(x)];
      px = parent_[static_cast<std::size_t>(px)];
      x = px;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

PermGroup subgroup_from_elements(int n, const std::vector<Permutation>& elements) {
  std::vector<Permutation> gens;
  auto current = PermGroup::trivial(n);
  for (const auto& s : elements) {
    if (current.contains(s)) continue;
    gens.push_back(s);
    current = PermGroup::closure(n, gens);
  }
  return current;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorKind::PreconditionViolated, "images do not form a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw Error(ErrorKind::BadIndices, "transposition indices out of range");
  auto t = identity(n);
  std::swap(t.images_[static_cast<std::size_t>(i)], t.images_[static_cast<std::size_t>(j)]);
  return t;
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> img(images.size());
  std::transform(images.begin(), images.end(), img.begin(), [](int v) { return v - 1; });
  return Permutation(std::move(img));
}

Permutation Permutation::parse_cycles(int n, std::string_view text) {
  auto result = identity(n);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size() || text.substr(pos) == "e") return result;
  while (true) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw Error(ErrorKind::ParseError, "expected '(' in cycle string \"" + std::string(text) + "\"");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw Error(ErrorKind::ParseError, "bad cycle string \"" + std::string(text) + "\"");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) v = v * 10 + (text[pos++] - '0');
      if (v < 1 || v > n) throw Error(ErrorKind::ParseError, "cycle label " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (std::find(cycle.begin(), cycle.end(), v - 1) != cycle.end())
        throw Error(ErrorKind::ParseError, "repeated label in cycle");
      cycle.push_back(v - 1);
    }
    if (cycle.size() > 1) {
      auto img = identity(n).images_;
      for (std::size_t k = 0; k < cycle.size(); ++k)
        img[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
      result = result * Permutation(std::move(img));
    }
  }
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

int Permutation::sign() const {
  int s = 1;
  for (const auto& c : cycles())
    if (c.size() % 2 == 0) s = -s;
  return s;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> c;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      c.push_back(x);
    }
    if (c.size() > 1) out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(images_.size());
  std::transform(images_.begin(), images_.end(), out.begin(), [](int v) { return v + 1; });
  return out;
}

std::string Permutation::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k] + 1;
    os << ')';
  }
  return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(ErrorKind::DegreeMismatch, "composing permutations of different degree");
  Permutation out;
  out.images_.resize(b.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i) out.images_[i] = a(b.images_[i]);
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

PermGroup PermGroup::closure(int n, std::vector<Permutation> gens, std::size_t cap) {
  for (const auto& s : gens)
    if (s.degree() != n)
      throw Error(ErrorKind::DegreeMismatch, "generator of degree " + std::to_string(s.degree()) + " in a group of degree " + std::to_string(n));

  PermGroup g;
  g.n_ = n;
  g.generators_ = std::move(gens);

  std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
  std::vector<Permutation> found{Permutation::identity(n)};
  seen.emplace(found.front(), 0);
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& s : g.generators_) {
      Permutation next = s * found[head];
      if (seen.contains(next)) continue;
      if (found.size() >= cap)
        throw Error(ErrorKind::ClosureCapExceeded, "closure exceeds " + std::to_string(cap) + " elements");
      seen.emplace(next, found.size());
      found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end());
  g.elements_ = std::move(found);
  g.index_.reserve(g.elements_.size());
  for (std::size_t k = 0; k < g.elements_.size(); ++k) g.index_.emplace(g.elements_[k], k);
  return g;
}

PermGroup PermGroup::trivial(int n) { return closure(n, {}); }

PermGroup PermGroup::symmetric(int n) {
  std::vector<Permutation> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(Permutation::transposition(n, i, i + 1));
  return closure(n, std::move(gens));
}

PermGroup PermGroup::alternating(int n) {
  std::vector<Permutation> gens;
  for (int k = 2; k < n; ++k) {
    auto img = Permutation::identity(n).images();
    img[0] = 1;
    img[1] = k;
    img[static_cast<std::size_t>(k)] = 0;
    gens.emplace_back(std::move(img));
  }
  return closure(n, std::move(gens));
}

bool PermGroup::contains(const Permutation& p) const { return index_.contains(p); }

std::size_t PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw Error(ErrorKind::NotInGroup, p.to_cycle_string() + " is not in the group");
  return it->second;
}

SupportGroup support_group(const CMatrix& d, double zero_tol) {
  if (!d.is_square()) throw Error(ErrorKind::ShapeMismatch, "support_group needs a square matrix");
  const int n = static_cast<int>(d.rows());
  const double cutoff = zero_tol * d.max_abs();
  SupportGroup out;
  std::vector<Permutation> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      if (std::abs(d(ui, uj)) > cutoff || std::abs(d(uj, ui)) > cutoff) {
        out.transpositions.emplace_back(i, j);
        gens.push_back(Permutation::transposition(n, i, j));
      }
    }
  out.group = PermGroup::closure(n, std::move(gens));
  return out;
}

std::vector<std::vector<int>> orbits(const PermGroup& g) {
  const int n = g.degree();
  DisjointSet ds(n);
  // Generators suffice; fall back to all elements if none were recorded.
  const auto& movers = g.generators().empty() ? g.elements() : g.generators();
  for (const auto& s : movers)
    for (int i = 0; i < n; ++i) ds.unite(i, s(i));
  std::vector<std::vector<int>> out;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int root = ds.find(i);
    auto& s = slot[static_cast<std::size_t>(root)];
    if (s < 0) {
      s = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(s)].push_back(i);
  }
  return out;
}

PermGroup stabilizer(const PermGroup& g, int p) {
  if (p < 0 || p >= g.degree()) throw Error(ErrorKind::IndexOutOfRange, "stabilizer point out of range");
  std::vector<Permutation> fixing;
  for (const auto& s : g.elements())
    if (s(p) == p) fixing.push_back(s);
  return subgroup_from_elements(g.degree(), fixing);
}

Permutation restrict_permutation(const Permutation& s, int p) {
  const int n = s.degree();
  if (p < 0 || p >= n) throw Error(ErrorKind::IndexOutOfRange, "restriction point out of range");
  if (s(p) != p) throw Error(ErrorKind::NotFixing, s.to_cycle_string() + " moves " + std::to_string(p + 1));
  std::vector<int> img;
  img.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n; ++i) {
    if (i == p) continue;
    const int v = s(i);
    img.push_back(v < p ? v : v - 1);
  }
  return Permutation(std::move(img));
}

Permutation extend_permutation(const Permutation& s, int p) {
  const int n = s.degree() + 1;
  if (p < 0 || p >= n) throw Error(ErrorKind::IndexOutOfRange, "extension point out of range");
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (i == p) {
      img[static_cast<std::size_t>(i)] = p;
      continue;
    }
    const int v = s(i < p ? i : i - 1);
    img[static_cast<std::size_t>(i)] = v < p ? v : v + 1;
  }
  return Permutation(std::move(img));
}

PermGroup restrict(const PermGroup& g, int p) {
  if (p < 0 || p >= g.degree()) throw Error(ErrorKind::IndexOutOfRange, "restriction point out of range");
  for (const auto& s : g.generators())
    if (s(p) != p) throw Error(ErrorKind::NotFixing, s.to_cycle_string() + " moves " + std::to_string(p + 1));
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(restrict_permutation(s, p));
  auto out = PermGroup::closure(g.degree() - 1, std::move(gens));
  if (out.order() != g.order()) throw Error(ErrorKind::NotFixing, "some element moves " + std::to_string(p + 1));
  return out;
}

bool is_subgroup(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) throw Error(ErrorKind::DegreeMismatch, "is_subgroup on groups of different degree");
  return std::all_of(h.elements().begin(), h.elements().end(), [&](const Permutation& s) { return g.contains(s); });
}

bool is_subgroup_by_generators(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) throw Error(ErrorKind::DegreeMismatch, "is_subgroup on groups of different degree");
  return std::all_of(h.generators().begin(), h.generators().end(), [&](const Permutation& s) { return g.contains(s); });
}

}  // namespace schur
