// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <numbers>
#include <string>

#include "schur/compat.hpp"
#include "schur/error.hpp"
#include "schur/genmatfn.hpp"
#include "schur/tensorlab.hpp"
#include "support/support.hpp"

using namespace schur;
using namespace schur::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Upper triangular H with random zero pattern and unit-modulus nonzeros.
CMatrix unit_modulus_upper(std::size_t n, unsigned pattern, Rng& rng) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  CMatrix a(n, n);
  unsigned bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = std::polar(1.0, phase(rng));
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if (pattern & (1u << bit)) a(i, j) = std::polar(1.0, phase(rng));
  }
  return a;
}

// Block-diagonal PD matrix, relabeled by a random permutation, with extra zeros.
CMatrix structured_pd(std::size_t n, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<int> block(n);
  int current = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && unit(rng) < 0.35) ++current;
    block[i] = current;
  }
  std::vector<std::size_t> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  CMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(relabel[i], relabel[i]) = static_cast<double>(n) + unit(rng);
    for (std::size_t j = i + 1; j < n; ++j)
      if (block[i] == block[j] && unit(rng) < 0.6) {
        const cplx z = 0.6 * random_complex(rng);
        h(relabel[i], relabel[j]) = z;
        h(relabel[j], relabel[i]) = std::conj(z);
      }
  }
  return h;
}

Outcome ac1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto g = PermGroup::symmetric(3);
  const auto rep = UnitaryRep::builtin("s3_standard_2d", g);
  const CMatrix h = worked_h();
  const CMatrix m_h = gmf(h, g, rep);
  o.require(near(m_h, CMatrix{{2.5, kR3}, {kR3, 3.5}}, 1e-9), "M_H entries");
  const auto eig = herm_eig(m_h);
  o.require(std::abs(eig.values[0] - 2.0) <= 1e-9 && std::abs(eig.values[1] - 4.0) <= 1e-9, "eigenvalues");
  o.require(near(det(h), 2.0, 1e-9), "det(H)");
  const CVector u = eig.column(0);
  const cplx overlap = u[0] * (-kR3) + u[1] * 0.5;
  o.require(std::abs(std::abs(overlap) - 1.0) <= 1e-9, "u_min direction");
  o.require(near(quadratic_form(rep.evaluate(cyc(3, "(2 3)")), u, u), -1.0, 1e-9), "(M((2 3))u,u) = -1");
  const auto report = schur_check(h, g, rep, u);
  o.require(report.equality && report.diagnosis.holds(), "equality verdict");
  const double dt = seconds_since(t0);
  o.require(dt < 0.1, "runtime " + num(dt) + " s");
  if (o.pass) o.detail = "M_H, eigenvalues {2,4}, det 2, u_min, equality; " + num(dt) + " s";
  return o;
}

Outcome ac2() {
  Outcome o;
  const auto g = PermGroup::symmetric(3);
  const auto tr = trace_report(worked_h(), g, UnitaryRep::builtin("s3_standard_2d", g));
  o.require(std::abs(tr.m_det - 4.0) <= 1e-9 && std::abs(tr.trace - 6.0) <= 1e-9 && tr.m_det < tr.trace, "4 < 6");
  const auto spt = UnitaryRep::builtin("sign_plus_trivial", g);
  Rng rng(202);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const CMatrix h = random_pd(3, rng);
    const CMatrix m = gmf(h, g, spt);
    worst = std::max(worst, max_abs_diff(m, CMatrix{{det(h), 0.0}, {0.0, permanent_direct(h)}}));
  }
  o.require(worst <= 1e-9, "diag(det, per) deviation " + num(worst));
  if (o.pass) o.detail = "m det(H) = 4 < Tr(M_H) = 6; diag(det, per) on 100 H, max dev " + num(worst);
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(303);
  double worst = 0.0;
  for (int t = 0; t < 600; ++t) {
    const int n = 1 + t % 4;
    const auto sz = static_cast<std::size_t>(n);
    const auto g = random_subgroup(n, rng);
    const auto rep = random_rep(g, rng);
    const auto u1 = random_unit(rep.dim(), rng), u2 = random_unit(rep.dim(), rng);
    const auto a = random_matrix(sz, sz, rng), b = random_matrix(sz, sz, rng);
    const cplx lhs = inner(symmetrize(rep, u1, a), symmetrize(rep, u2, b));
    const cplx rhs = static_cast<double>(g.order()) * quadratic_form(gmf(ab_star(a, b), g, rep), u1, u2);
    worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(lhs) + std::abs(rhs)));
  }
  const double dt = seconds_since(t0);
  o.require(worst <= 1e-8, "relative residual " + num(worst));
  o.require(dt < 10.0, "runtime " + num(dt) + " s");
  if (o.pass) o.detail = "600 cases, max relative residual " + num(worst) + "; " + num(dt) + " s";
  return o;
}

Outcome ac4() {
  Outcome o;
  Rng rng(404);
  double worst_idem = 0.0, worst_adj = 0.0;
  for (int t = 0; t < 120; ++t) {
    const int n = 1 + t % 4;
    const auto g = random_subgroup(n, rng);
    const auto rep = random_rep(g, rng);
    TensorVector v(rep.dim(), n), w(rep.dim(), n);
    for (auto& z : v.coeffs()) z = random_complex(rng);
    for (auto& z : w.coeffs()) z = random_complex(rng);
    const auto tv = apply_symmetry(rep, v);
    auto diff = apply_symmetry(rep, tv);
    auto scaled = tv;
    scaled *= static_cast<double>(g.order());
    diff -= scaled;
    worst_idem = std::max(worst_idem, diff.norm() / std::max(1.0, scaled.norm()));
    const cplx l = inner(tv, w), r = inner(v, apply_symmetry(rep, w));
    worst_adj = std::max(worst_adj, std::abs(l - r) / std::max(1.0, tv.norm() * w.norm()));
  }
  o.require(worst_idem <= 1e-9, "T_G^2 residual " + num(worst_idem));
  o.require(worst_adj <= 1e-9, "adjoint residual " + num(worst_adj));
  if (o.pass) o.detail = "120 tensors, T_G^2 = g T_G to " + num(worst_idem) + ", T_G* = T_G to " + num(worst_adj);
  return o;
}

Outcome ac5() {
  Outcome o;
  Rng rng(505);
  double min_gap = 1e300, min_eig = 1e300;
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + t % 4;
    const auto g = random_subgroup(n, rng);
    const auto rep = random_rep(g, rng);
    const CMatrix h = random_pd(static_cast<std::size_t>(n), rng, 0.05);
    const auto r = schur_check(h, g, rep, random_unit(rep.dim(), rng));
    min_gap = std::min(min_gap, r.gap);
    min_eig = std::min(min_eig, herm_eig(r.m_h).values.front());
  }
  o.require(min_gap >= -1e-9, "gap " + num(min_gap));
  o.require(min_eig > 0.0, "lambda_min " + num(min_eig));
  if (o.pass) o.detail = "1000 cases, min gap " + num(min_gap) + ", min lambda(M_H) " + num(min_eig);
  return o;
}

Outcome ac6() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(606);
  const auto s3 = PermGroup::symmetric(3);
  const std::vector<std::string> names{"sign", "trivial", "sign_plus_trivial", "s3_standard_2d"};
  std::size_t cases = 0, equalities = 0;
  for (unsigned pattern = 0; pattern < 8; ++pattern) {
    const CMatrix a = unit_modulus_upper(3, pattern, rng);
    const CMatrix h = ab_star(a, a);
    for (const auto& g : subgroups_s3())
      for (const auto& name : names) {
        const auto full = UnitaryRep::builtin(name, s3);
        const auto rep = full.restrict_to(g);
        std::vector<CVector> probes;
        for (const char* t : {"(1 2)", "(1 3)", "(2 3)"}) {
          const auto eig = herm_eig(full.evaluate(cyc(3, t)));
          for (std::size_t k = 0; k < rep.dim(); ++k) probes.push_back(eig.column(k));
        }
        for (std::size_t k = 0; k < rep.dim(); ++k) {
          CVector e(rep.dim());
          e[k] = 1.0;
          probes.push_back(e);
        }
        for (int k = 0; k < 20; ++k) probes.push_back(random_unit(rep.dim(), rng));
        for (const auto& u : probes) {
          const auto chain = equality_chain_report(h, g, rep, u);
          ++cases;
          if (chain.conditions[0]) ++equalities;
          o.require(chain.all_agree(), "disagreement: pattern " + std::to_string(pattern) + ", |G| = " +
                                           std::to_string(g.order()) + ", rep " + name);
        }
      }
  }
  const double dt = seconds_since(t0);
  o.require(dt < 60.0, "runtime " + num(dt) + " s");
  if (o.pass)
    o.detail = std::to_string(cases) + " cases agree (" + std::to_string(equalities) + " with equality); " + num(dt) + " s";
  return o;
}

Outcome ac7() {
  Outcome o;
  Rng rng(707);
  std::uniform_int_distribution<int> coin(0, 1);
  double worst = 0.0;
  std::size_t checks = 0;
  for (int n = 3; n <= 4; ++n)
    for (int t = 0; t < 25; ++t) {
      const auto g = random_subgroup(n, rng);
      const auto rep = random_rep(g, rng);
      const auto u = random_unit(rep.dim(), rng);
      CMatrix a = random_upper(static_cast<std::size_t>(n), rng, 0.3);
      // clear a random column so at least one p qualifies
      const auto clear = static_cast<std::size_t>(std::uniform_int_distribution<int>(0, n - 1)(rng));
      for (std::size_t i = 0; i < clear; ++i) a(i, clear) = 0.0;
      for (int p = 0; p < n; ++p) {
        bool lone = true;
        for (int i = 0; i < p; ++i) lone = lone && a(static_cast<std::size_t>(i), static_cast<std::size_t>(p)) == cplx(0.0);
        if (!lone) continue;
        worst = std::max(worst, projection_identity_check(rep, u, a, p));
        ++checks;
      }
    }
  o.require(checks > 0, "no qualifying columns");
  o.require(worst <= 1e-9, "residual " + num(worst));
  if (o.pass) o.detail = std::to_string(checks) + " (A, p) pairs over all of Gamma_{n,p}, max residual " + num(worst);
  return o;
}

Outcome ac8() {
  Outcome o;
  for (int n = 2; n <= 6; ++n)
    for (int r = 0; r < n; ++r)
      for (int c = r + 1; c < n; ++c) {
        const auto count = compatible(SpikeFunction{r, c}.as_multi_index(n)).size();
        o.require(count == (1u << (c - r)) && compatible_spike(n, r, c).size() == count,
                  "count at n=" + std::to_string(n) + " r=" + std::to_string(r + 1) + " c=" + std::to_string(c + 1));
      }

  Rng rng(808);
  std::size_t spikes = 0;
  while (spikes < 200) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const CMatrix a = random_upper(static_cast<std::size_t>(n), rng, 0.5);
    const int c = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    const auto sp = max_row_spike(a, c);
    if (!sp) continue;
    ++spikes;
    std::vector<Permutation> expect{Permutation::identity(n), Permutation::transposition(n, sp->r, sp->c)};
    std::sort(expect.begin(), expect.end());
    o.require(restricted_compatible(sp->as_multi_index(n), a, 1e-12) == expect, "restricted set is not {id, (r c)}");
  }

  double worst = 0.0;
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + t % 4;
    const auto g = random_subgroup(n, rng);
    const auto rep = random_rep(g, rng);
    const auto u = random_unit(rep.dim(), rng);
    const CMatrix a = random_upper(static_cast<std::size_t>(n), rng, 0.4);
    for (int c = 1; c < n; ++c) {
      const auto sp = max_row_spike(a, c);
      if (!sp) continue;
      const auto tau = Permutation::transposition(n, sp->r, sp->c);
      cplx diag = 1.0;
      for (int i = 0; i < n; ++i)
        if (i != sp->r) diag *= a(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
      cplx weight = dot(u, u);
      if (g.contains(tau)) weight += quadratic_form(rep.evaluate(tau), u, u);
      const cplx closed = weight * diag * a(static_cast<std::size_t>(sp->r), static_cast<std::size_t>(sp->c));
      const auto b = basis_inner(rep, u, a, sp->as_multi_index(n));
      worst = std::max(worst, std::abs(b.coefficient - closed));
    }
  }
  o.require(worst <= 1e-9, "spike inner product deviation " + num(worst));
  if (o.pass) o.detail = "counts 2^(c-r) for n <= 6; 200 spikes restrict to {id, (r c)}; closed forms to " + num(worst);
  return o;
}

Outcome ac9() {
  Outcome o;
  Rng rng(909);
  for (int t = 0; t < 200; ++t) {
    const CMatrix h = structured_pd(static_cast<std::size_t>(1 + t % 5), rng);
    o.require(support_group(h).group == support_group(upper_cholesky(h)).group, "support groups differ");
  }
  // a12 = 0 but a13, a23 != 0: H gains the (1,2) pair through h12 = a13 conj(a23).
  const CMatrix a{{1.0, 0.0, 0.7}, {0.0, 1.0, cplx(0.2, 0.5)}, {0.0, 0.0, 1.0}};
  const CMatrix h = ab_star(a, a);
  const auto sa = support_group(a), sh = support_group(upper_cholesky(h));
  o.require(sa.transpositions != support_group(h).transpositions, "fixture generating sets coincide");
  o.require(sa.group == sh.group && sa.group == PermGroup::symmetric(3), "fixture groups differ");
  if (o.pass) o.detail = "200 structured H; fixture with generators {(1 3),(2 3)} vs {(1 2),(1 3),(2 3)}, both S3";
  return o;
}

Outcome ac10() {
  Outcome o;
  Rng rng(1010);
  const auto s2 = PermGroup::symmetric(2);
  const auto tau = cyc(2, "(1 2)");
  std::size_t cases = 0, present = 0;
  for (const auto& g : {PermGroup::trivial(2), s2})
    for (const char* name : {"sign_plus_trivial", "natural_permutation"}) {
      const auto full = UnitaryRep::builtin(name, s2);
      const auto rep = full.restrict_to(g);
      for (int k = 0; k < 10; ++k)
        for (int l = 0; l < 10; ++l) {
          const double theta = k * std::numbers::pi / 8.0, phi = 2.0 * std::numbers::pi * l / 10.0;
          const CVector u{std::cos(theta), std::polar(std::sin(theta), phi)};
          const bool minus_one = std::abs(quadratic_form(full.evaluate(tau), u, u) + 1.0) <= 1e-12;
          for (bool spiked : {false, true}) {
            const cplx a12 = spiked ? random_complex(rng) : cplx(0.0);
            const CMatrix a{{std::polar(0.5 + 0.1 * k, phi), a12}, {0.0, std::polar(1.5 - 0.05 * l, theta)}};
            const bool expect = !spiked || (g.contains(tau) && minus_one);
            const bool got = collinearity(rep, u, a).has_value();
            ++cases;
            present += got;
            o.require(got == expect, std::string("mismatch at ") + name + ", theta index " + std::to_string(k) +
                                         ", phi index " + std::to_string(l));
          }
        }
    }
  if (o.pass) o.detail = std::to_string(cases) + " cases exact (" + std::to_string(present) + " collinear)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1  worked S3 example end to end", ac1},
      {"AC2  trace form and diag(det, per)", ac2},
      {"AC3  tensor inner product identity", ac3},
      {"AC4  T_G^2 = g T_G and T_G self-adjoint", ac4},
      {"AC5  Schur inequality on random data", ac5},
      {"AC6  six equality conditions agree at n = 3", ac6},
      {"AC7  projection identity", ac7},
      {"AC8  spike combinatorics", ac8},
      {"AC9  support group transport", ac9},
      {"AC10 n = 2 base case", ac10},
  };
  int failures = 0;
  for (const auto& [label, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("%s  %-44s %s\n", o.pass ? "PASS" : "FAIL", label, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
