#include <string>

#include "schur/detail/kernel_support.hpp"
#include "schur/error.hpp"
#include "schur/kernels.hpp"

namespace schur::kernels {

std::size_t function_count(int n) {
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(n);
  return total;
}

namespace detail {

SymmetrizeTables make_symmetrize_tables(const UnitaryRep& rep, std::span<const cplx> u, const CMatrix& a) {
  const int n = rep.group().degree();
  if (!a.is_square() || static_cast<int>(a.rows()) != n)
    throw Error(ErrorKind::ShapeMismatch, "tensor matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  if (u.size() != rep.dim())
    throw Error(ErrorKind::ShapeMismatch, "u has length " + std::to_string(u.size()) + ", representation degree is " +
                                              std::to_string(rep.dim()));
  if (n > 16) throw Error(ErrorKind::TooLarge, "tensor order above 16");
  SymmetrizeTables t;
  t.n = n;
  t.m = rep.dim();
  for (std::size_t e = 0; e < rep.group().order(); ++e) {
    t.inverses.push_back(rep.group().elements()[e].inverse().images());
    t.moved_u.push_back(rep.at(e) * u);
  }
  return t;
}

ApplyTables make_apply_tables(const UnitaryRep& rep, int n, std::size_t coeff_count) {
  if (n != rep.group().degree()) throw Error(ErrorKind::ShapeMismatch, "tensor order differs from group degree");
  if (n > 16) throw Error(ErrorKind::TooLarge, "tensor order above 16");
  if (coeff_count != function_count(n) * rep.dim()) throw Error(ErrorKind::ShapeMismatch, "coefficient count");
  ApplyTables t;
  t.n = n;
  t.m = rep.dim();
  for (const auto& s : rep.group().elements()) t.perms.push_back(s.images());
  std::size_t p = 1;
  for (int i = 0; i < n; ++i) {
    t.powers.push_back(p);
    p *= static_cast<std::size_t>(n);
  }
  return t;
}

}  // namespace detail

CMatrix gmf_sum_serial(const CMatrix& k, const UnitaryRep& rep, std::span<const std::size_t> elements,
                       IndexForm form) {
  detail::check_gmf_inputs(k, rep);
  CMatrix acc(rep.dim(), rep.dim());
  for (std::size_t e : elements) {
    const cplx w = detail::diagonal_product(k, rep.group().elements()[e], form);
    if (w == cplx{}) continue;
    detail::add_scaled(acc, rep.at(e), w);
  }
  return acc;
}

std::vector<cplx> symmetrize_serial(const UnitaryRep& rep, std::span<const cplx> u, const CMatrix& a) {
  const auto tables = detail::make_symmetrize_tables(rep, u, a);
  const std::size_t count = function_count(tables.n);
  std::vector<cplx> out(count * tables.m);
  for (std::size_t code = 0; code < count; ++code) detail::symmetrize_block(tables, a, code, out.data() + code * tables.m);
  return out;
}

std::vector<cplx> apply_serial(const UnitaryRep& rep, int n, std::span<const cplx> coeffs) {
  const auto tables = detail::make_apply_tables(rep, n, coeffs.size());
  const std::size_t count = function_count(n);
  std::vector<cplx> out(coeffs.size());
  for (std::size_t code = 0; code < count; ++code)
    detail::apply_block(tables, rep, coeffs, code, out.data() + code * tables.m);
  return out;
}

}  // namespace schur::kernels
