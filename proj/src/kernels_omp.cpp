#include <omp.h>

#include "schur/detail/kernel_support.hpp"
#include "schur/kernels.hpp"

namespace schur::kernels {

namespace {
constexpr std::size_t kGmfBlock = 32;
}

CMatrix gmf_sum_parallel(const CMatrix& k, const UnitaryRep& rep, std::span<const std::size_t> elements,
                         IndexForm form) {
  detail::check_gmf_inputs(k, rep);
  const std::size_t blocks = (elements.size() + kGmfBlock - 1) / kGmfBlock;
  std::vector<CMatrix> partial(blocks, CMatrix(rep.dim(), rep.dim()));
  const auto nblocks = static_cast<std::ptrdiff_t>(blocks);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kGmfBlock;
    const std::size_t hi = std::min(elements.size(), lo + kGmfBlock);
    CMatrix& acc = partial[static_cast<std::size_t>(b)];
    for (std::size_t at = lo; at < hi; ++at) {
      const std::size_t e = elements[at];
      const cplx w = detail::diagonal_product(k, rep.group().elements()[e], form);
      if (w == cplx{}) continue;
      detail::add_scaled(acc, rep.at(e), w);
    }
  }

  CMatrix total(rep.dim(), rep.dim());
  for (const auto& p : partial) total += p;
  return total;
}

std::vector<cplx> symmetrize_parallel(const UnitaryRep& rep, std::span<const cplx> u, const CMatrix& a) {
  const auto tables = detail::make_symmetrize_tables(rep, u, a);
  const auto count = static_cast<std::ptrdiff_t>(function_count(tables.n));
  std::vector<cplx> out(static_cast<std::size_t>(count) * tables.m);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t code = 0; code < count; ++code)
    detail::symmetrize_block(tables, a, static_cast<std::size_t>(code),
                             out.data() + static_cast<std::size_t>(code) * tables.m);
  return out;
}

std::vector<cplx> apply_parallel(const UnitaryRep& rep, int n, std::span<const cplx> coeffs) {
  const auto tables = detail::make_apply_tables(rep, n, coeffs.size());
  const auto count = static_cast<std::ptrdiff_t>(function_count(n));
  std::vector<cplx> out(coeffs.size());

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t code = 0; code < count; ++code)
    detail::apply_block(tables, rep, coeffs, static_cast<std::size_t>(code),
                        out.data() + static_cast<std::size_t>(code) * tables.m);
  return out;
}

}  // namespace schur::kernels
