#include "schur/cxlinalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cmath>
#include <numeric>
#include <string>

#include "schur/error.hpp"

namespace schur {

namespace {

void require_square(const CMatrix& a, const char* what) {
  if (!a.is_square())
    throw Error(ErrorKind::ShapeMismatch, std::string(what) + " needs a square matrix, got " +
                                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

double offdiag_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

HermitianCheck check_hermitian(const CMatrix& h, double tol) {
  require_square(h, "check_hermitian");
  HermitianCheck out;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = i; j < h.cols(); ++j) {
      const double d = std::abs(h(i, j) - std::conj(h(j, i)));
      if (d > out.max_asymmetry) {
        out.max_asymmetry = d;
        out.row = i;
        out.col = j;
      }
    }
  out.hermitian = h.all_finite() && out.max_asymmetry <= tol * h.max_abs();
  return out;
}

void require_hermitian(const CMatrix& h, double tol) {
  require_square(h, "require_hermitian");
  if (!h.all_finite()) throw Error(ErrorKind::NotHermitian, "matrix has non-finite entries");
  const auto c = check_hermitian(h, tol);
  if (!c.hermitian)
    throw Error(ErrorKind::NotHermitian, "|H(" + std::to_string(c.row + 1) + "," + std::to_string(c.col + 1) +
                                             ") - conj(H(" + std::to_string(c.col + 1) + "," +
                                             std::to_string(c.row + 1) + "))| = " + std::to_string(c.max_asymmetry));
}

CMatrix upper_cholesky(const CMatrix& h, double pd_tol, double herm_tol) {
  require_hermitian(h, herm_tol);
  const std::size_t n = h.rows();
  const double floor = pd_tol * h.max_abs();
  auto flipped = [&](std::size_t i, std::size_t j) { return h(n - 1 - i, n - 1 - j); };

  CMatrix lower(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = flipped(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(lower(j, k));
    if (!(d > floor))
      throw Error(ErrorKind::NotPositiveDefinite,
                  "pivot " + std::to_string(d) + " at index " + std::to_string(n - j) + " is not positive");
    const double ljj = std::sqrt(d);
    lower(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = flipped(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= lower(i, k) * std::conj(lower(j, k));
      lower(i, j) = s / ljj;
    }
  }

  CMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = lower(n - 1 - i, n - 1 - j);
  return a;
}

bool is_upper_triangular(const CMatrix& a, double zero_tol) {
  if (!a.is_square()) return false;
  const double cutoff = zero_tol * a.max_abs();
  for (std::size_t i = 1; i < a.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(a(i, j)) > cutoff) return false;
  return true;
}

cplx det(const CMatrix& a) {
  require_square(a, "det");
  const std::size_t n = a.rows();
  CMatrix lu = a;
  cplx result = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
    if (lu(piv, k) == cplx{}) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      result = -result;
    }
    const cplx pivot = lu(k, k);
    result *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx f = lu(i, k) / pivot;
      if (f == cplx{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return result;
}

cplx permanent(const CMatrix& k) {
  require_square(k, "permanent");
  const std::size_t n = k.rows();
  if (n > 10) throw Error(ErrorKind::TooLarge, "permanent limited to n <= 10, got " + std::to_string(n));
  if (n == 0) return 1.0;

  // Gray-code walk over column subsets; row_sums[i] = sum_{j in S} K(i,j).
  std::vector<cplx> row_sums(n, 0.0);
  cplx total = 0.0;
  std::uint32_t gray = 0;
  const std::uint32_t subsets = 1u << n;
  for (std::uint32_t step = 1; step < subsets; ++step) {
    const std::uint32_t next = step ^ (step >> 1);
    const std::uint32_t flipped = next ^ gray;
    const auto col = static_cast<std::size_t>(std::countr_zero(flipped));
    const double dir = (next & flipped) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i) row_sums[i] += dir * k(i, col);
    gray = next;
    cplx prod = 1.0;
    for (const auto& s : row_sums) prod *= s;
    const bool odd = std::popcount(gray) % 2 == 1;
    total += odd ? -prod : prod;
  }
  return (n % 2 == 1) ? -total : total;
}

cplx permanent_direct(const CMatrix& k) {
  require_square(k, "permanent_direct");
  const std::size_t n = k.rows();
  if (n > 8) throw Error(ErrorKind::TooLarge, "direct permanent limited to n <= 8");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  cplx total = 0.0;
  do {
    cplx prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) prod *= k(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

EigenDecomposition herm_eig(const CMatrix& h, double herm_tol) {
  require_hermitian(h, herm_tol);
  const std::size_t n = h.rows();
  CMatrix a = h;
  CMatrix v = CMatrix::identity(n);
  const double scale = h.frobenius();
  int sweeps = 0;

  while (scale > 0.0 && offdiag_norm(a) > 1e-12 * scale && sweeps < 50) {
    ++sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double b = std::abs(apq);
        if (b == 0.0) continue;
        const cplx phase = apq / b;  // a_pq = b * phase
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * b);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // W acts on coordinates (p, q): W = diag(1, conj(phase)) * [[c, s], [-s, c]].
        const cplx wpp = c, wpq = s;
        const cplx wqp = -s * std::conj(phase), wqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * wpp + akq * wqp;
          a(k, q) = akp * wpq + akq * wqq;
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * wpp + vkq * wqp;
          v(k, q) = vkp * wpq + vkq * wqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(wpp) * apk + std::conj(wqp) * aqk;
          a(q, k) = std::conj(wpq) * apk + std::conj(wqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenDecomposition out;
  out.sweeps = sweeps;
  out.values.resize(n);
  out.vectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.values[k] = a(src, src).real();
    std::size_t big = 0;
    double big_abs = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double m = std::abs(v(i, src));
      if (m > big_abs * (1.0 + 1e-12)) {
        big_abs = m;
        big = i;
      }
    }
    const cplx fix = big_abs > 0.0 ? std::conj(v(big, src)) / big_abs : cplx(1.0);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, src) * fix;
    out.vectors(big, k) = out.vectors(big, k).real();
  }
  return out;
}

CMatrix delete_rc(const CMatrix& a, std::size_t p) {
  require_square(a, "delete_rc");
  if (p >= a.rows())
    throw Error(ErrorKind::IndexOutOfRange, "delete_rc index " + std::to_string(p + 1) + " outside 1.." + std::to_string(a.rows()));
  const std::size_t n = a.rows();
  CMatrix out(n - 1, n - 1);
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == p) continue;
    for (std::size_t j = 0, oj = 0; j < n; ++j) {
      if (j == p) continue;
      out(oi, oj++) = a(i, j);
    }
    ++oi;
  }
  return out;
}

CMatrix ab_star(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::ShapeMismatch, "ab_star operands differ in shape");
  CMatrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) {
      cplx s = 0.0;
      for (std::size_t t = 0; t < a.cols(); ++t) s += a(i, t) * std::conj(b(j, t));
      out(i, j) = s;
    }
  return out;
}

}  // namespace schur
