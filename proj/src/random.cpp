#include "schur/random.hpp"

#include <cmath>
#include <numbers>

namespace schur {

cplx random_complex(Rng& rng) {
  std::normal_distribution<double> d;
  const double re = d(rng);
  return {re, d(rng)};
}

CVector random_unit(std::size_t m, Rng& rng) {
  CVector v(m);
  double nrm = 0.0;
  while (nrm < 1e-3) {
    for (auto& z : v) z = random_complex(rng);
    nrm = norm2(v);
  }
  for (auto& z : v) z /= nrm;
  return v;
}

CMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  CMatrix m(rows, cols);
  for (auto& z : m.data()) z = random_complex(rng);
  return m;
}

CMatrix random_pd(std::size_t n, Rng& rng, double shift) {
  const CMatrix b = random_matrix(n, n, rng);
  CMatrix h = b * b.adjoint();
  for (std::size_t i = 0; i < n; ++i) h(i, i) = h(i, i).real() + shift;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) h(i, j) = std::conj(h(j, i));
  return h;
}

CMatrix random_upper(std::size_t n, Rng& rng, double zero_prob) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double mod = 0.5 + unit(rng);
    const double arg = 2.0 * std::numbers::pi * unit(rng);
    a(i, i) = std::polar(mod, arg);
    for (std::size_t j = i + 1; j < n; ++j)
      if (unit(rng) >= zero_prob) a(i, j) = random_complex(rng);
  }
  return a;
}

}  // namespace schur
