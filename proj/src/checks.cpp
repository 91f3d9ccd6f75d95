#include "qpb/checks.hpp"

#include <random>

#include "qpb/cohomology.hpp"
#include "qpb/errors.hpp"
#include "qpb/fano.hpp"
#include "qpb/gw.hpp"
#include "qpb/quantum.hpp"
#include "qpb/render.hpp"
#include "qpb/schubert.hpp"
#include "qpb/series.hpp"

namespace qpb {

namespace {

void emit_splittings(int r, int m_min, int m_max, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(acc.size()) == r) {
    out.push_back(acc);
    return;
  }
  for (int m = m_min; m <= m_max; ++m) {
    acc.push_back(m);
    emit_splittings(r, m, m_max, acc, out);
    acc.pop_back();
  }
}

bool w_invariant_bound(const BundleSpec& s) {
  long c1 = s.c1();
  return s.m1() == 1 && c1 < 2 * s.r() && 2 * c1 < s.n() + 1 + 2 * s.r();
}

bool closed_form_bound(const BundleSpec& s) {
  return classify_hypotheses(s).split_closed_form_bound;
}

struct Failure {
  bool failed = false;
  std::string what;
  void record(const std::string& w) {
    if (!failed) what = w;
    failed = true;
  }
};

CheckResult finish(std::string name, const Failure& f, long cases) {
  return CheckResult{std::move(name), !f.failed, cases,
                     f.failed ? f.what : "all comparisons exact"};
}

}  // namespace

std::vector<BundleSpec> split_grid(const GridBounds& g) {
  std::vector<BundleSpec> specs;
  for (int r = 2; r <= g.r_max; ++r) {
    std::vector<std::vector<int>> types;
    std::vector<int> acc;
    emit_splittings(r, 1, g.m_max, acc, types);
    for (int n = 1; n <= g.n_max; ++n)
      for (const auto& m : types) specs.push_back(BundleSpec::split(n, m));
  }
  return specs;
}

CheckResult check_w_two_path(const GridBounds& g) {
  Failure f;
  long cases = 0;
  for (const BundleSpec& s : split_grid(g)) {
    if (!w_invariant_bound(s)) continue;
    for (int i = 0; i + s.r() <= s.c1(); ++i) {
      ++cases;
      try {
        gw_W(s, i);  // asserts series == integral internally
      } catch (const std::exception& e) {
        f.record(s.describe() + ", i=" + std::to_string(i) + ": " + e.what());
      }
    }
  }
  return finish("w-two-path", f, cases);
}

CheckResult check_w_classical_pairing(const GridBounds& g) {
  Failure f;
  long cases = 0;
  for (const BundleSpec& s : split_grid(g)) {
    if (!w_invariant_bound(s)) continue;
    for (int i = 0; i + s.r() <= s.c1(); ++i) {
      ++cases;
      try {
        if (!verify_w_pairing(s, i))
          f.record(s.describe() + ", i=" + std::to_string(i) +
                   ": pairing route disagrees with W");
      } catch (const std::exception& e) {
        f.record(s.describe() + ", i=" + std::to_string(i) + ": " + e.what());
      }
    }
  }
  return finish("w-classical-pairing", f, cases);
}

CheckResult check_split_relation_goldens() {
  Failure f;
  long cases = 0;
  auto expect = [&](const BundleSpec& s, const std::string& want) {
    ++cases;
    std::string got = render_relations_text(relations_split(s));
    if (got != want)
      f.record(s.describe() + ": got\n" + got + "want\n" + want);
  };
  expect(BundleSpec::split(2, {1, 1, 1}),
         "f1: h^3 = q^3\nf2: (xi - h)^3 = q^3\n");
  expect(BundleSpec::split(1, {1, 1}),
         "f1: h^2 = q^2\nf2: (xi - h)^2 = q^2\n");
  expect(BundleSpec::split(2, {1, 1, 2}),
         "f1: h^3 = (xi - 2 h) q^2\nf2: (xi - h)^2 (xi - 2 h) = q^3\n");
  expect(BundleSpec::split(3, {1, 2}),
         "f1: h^4 = (xi - 2 h) q^3\nf2: (xi - h) (xi - 2 h) = q^2\n");

  // The same shapes as ring elements, for every all-ones and
  // O(1)^{r-1}+O(2) grid spec inside the bound.
  for (int r = 2; r <= 5; ++r) {
    for (int n = 1; n <= 6; ++n) {
      std::vector<int> ones(static_cast<std::size_t>(r), 1);
      BundleSpec s1 = BundleSpec::split(n, ones);
      if (closed_form_bound(s1)) {
        ++cases;
        QuantumRelations rel = relations_split(s1);
        IntPoly q_np1 = IntPoly::monomial(kHXiQVars, {0, 0, n + 1}, 1);
        IntPoly q_r = IntPoly::monomial(kHXiQVars, {0, 0, r}, 1);
        if (!(rel.rhs1() == q_np1) || !(rel.rhs2() == q_r))
          f.record(s1.describe() + ": all-ones relations malformed");
      }
      std::vector<int> with2 = ones;
      with2.back() = 2;
      BundleSpec s2 = BundleSpec::split(n, with2);
      if (closed_form_bound(s2)) {
        ++cases;
        QuantumRelations rel = relations_split(s2);
        IntPoly want(kHXiQVars);  // (xi - 2h) q^n, since c_1 = r+1
        want.add_term({0, 1, n}, 1);
        want.add_term({1, 0, n}, -2);
        if (!(rel.rhs1() == want))
          f.record(s2.describe() + ": O(1)^{r-1}+O(2) first relation wrong");
      }
    }
  }
  return finish("split-relation-goldens", f, cases);
}

CheckResult check_tangent_two_way() {
  Failure f;
  long cases = 0;
  for (int n = 2; n <= 8; ++n) {
    ++cases;
    QuantumRelations closed = relations_tangent(n);
    QuantumRelations assembled = derive_tangent_relations(n);
    if (!closed.same_relations(assembled)) {
      f.record("tangent n=" + std::to_string(n) +
               ": closed form and assembled relations differ");
      continue;
    }
    Int want = (n % 2 == 0) ? 2 : 0;
    if (!(closed.rhs2().coeff({0, 0, n}) == want))
      f.record("tangent n=" + std::to_string(n) +
               ": second-relation coefficient is not 1+(-1)^n");
  }
  return finish("tangent-two-way", f, cases);
}

CheckResult check_schubert_integrals() {
  Failure f;
  long cases = 0;
  const long catalan[] = {1, 2, 5, 14, 42};
  for (int n = 2; n <= 6; ++n) {
    ++cases;
    SymPoly p = SymPoly::constant(1);
    for (int i = 0; i < 2 * n - 2; ++i) p = p * sigma_meet(2);
    if (integrate_g2(p, n) != catalan[n - 2])
      f.record("degree of G(2," + std::to_string(n + 1) + ") wrong");
    ++cases;
    if (integrate_g2(sigma_meet(n) * sigma_meet(n), n) != 1)
      f.record("line through two points in P^" + std::to_string(n) +
               " is not unique");
  }
  return finish("schubert-integrals", f, cases);
}

namespace {

// Strategy-independent rewriting: picks a random reducible term and a random
// applicable rule at each step. Must reach the same normal form as the
// deterministic reducer.
IntPoly q_reduce_random_order(IntPoly p, const QuantumRelations& rel,
                              std::mt19937_64& rng) {
  const int n = rel.spec().n();
  const int r = rel.spec().r();
  for (;;) {
    std::vector<std::pair<IntPoly::Exponents, int>> reducible;  // (term, rule)
    for (const auto& [e, c] : p.terms()) {
      if (e[1] >= r) reducible.push_back({e, 0});
      if (e[0] >= n + 1) reducible.push_back({e, 1});
    }
    if (reducible.empty()) return p;
    const auto& [e, rule] =
        reducible[std::uniform_int_distribution<std::size_t>(
            0, reducible.size() - 1)(rng)];
    Int c = p.coeff(e);
    p.add_term(e, -c);
    if (rule == 0)
      p += rel.xi_rule().times_monomial({e[0], e[1] - r, e[2]}, c);
    else
      p += rel.rhs1().times_monomial({e[0] - n - 1, e[1], e[2]}, c);
  }
}

IntPoly random_hxiq_poly(int n, int r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> hexp(0, n + 3);
  std::uniform_int_distribution<int> xexp(0, r + 3);
  std::uniform_int_distribution<int> qexp(0, 2);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> nterms(1, 5);
  IntPoly p(kHXiQVars);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    int c = coef(rng);
    if (c == 0) c = 1;
    p.add_term({hexp(rng), xexp(rng), qexp(rng)}, c);
  }
  return p;
}

bool in_basis_box(const QClass& c) {
  for (const auto& [ijk, v] : c.coeff) {
    if (std::get<0>(ijk) < 0 || std::get<0>(ijk) > c.spec.n()) return false;
    if (std::get<1>(ijk) < 0 || std::get<1>(ijk) > c.spec.r() - 1)
      return false;
    if (std::get<2>(ijk) < 0) return false;
  }
  return true;
}

}  // namespace

CheckResult check_quantum_soundness(const GridBounds& g) {
  Failure f;
  long cases = 0;

  std::vector<QuantumRelations> rels;
  for (const BundleSpec& s : split_grid(g))
    if (closed_form_bound(s)) rels.push_back(relations_split(s));
  for (int n = 2; n <= g.n_max; ++n) rels.push_back(relations_tangent(n));

  std::mt19937_64 rng(0x51u);
  for (const QuantumRelations& rel : rels) {
    const BundleSpec& s = rel.spec();
    const int n = s.n();
    const int r = s.r();

    // (a) q = 0 recovers the classical presentation.
    ++cases;
    if (!rel.rhs1().subst_zero(2).is_zero() ||
        !rel.rhs2().subst_zero(2).is_zero())
      f.record(s.describe() + ": q=0 limit is not the classical relation");
    if (s.is_split()) {
      IntPoly prod = IntPoly::constant(kHXiQVars, 1);
      for (int m : s.splitting()) {
        IntPoly lin(kHXiQVars);
        lin.add_term({0, 1, 0}, 1);
        lin.add_term({1, 0, 0}, -m);
        prod = prod * lin;
      }
      ++cases;
      if (!(prod == classical_lhs2(s)))
        f.record(s.describe() + ": factored and alternating-sum forms of "
                                "the classical relation differ");
    }

    // (b) homogeneity with q of degree 1, per monomial.
    ++cases;
    auto hom1 = rel.rhs1().homogeneous_degree();
    auto hom2 = rel.rhs2().homogeneous_degree();
    if ((!rel.rhs1().is_zero() && (!hom1 || *hom1 != n + 1)) ||
        (!rel.rhs2().is_zero() && (!hom2 || *hom2 != r)))
      f.record(s.describe() + ": relation right-hand side inhomogeneous");

    // (c) reduction is order-independent.
    for (int trial = 0; trial < 200; ++trial) {
      ++cases;
      IntPoly p = random_hxiq_poly(n, r, rng);
      IntPoly det = to_poly(q_normal_form(p, rel));
      IntPoly rnd = q_reduce_random_order(p, rel, rng);
      if (!(det == rnd)) {
        f.record(s.describe() + ": normal form depends on reduction order");
        break;
      }
    }

    // (d) the monomial box over q-powers absorbs every h^a xi^b, and the
    // reduction preserves total degree.
    for (int a = 0; a <= 2 * n; ++a) {
      for (int b = 0; b <= 2 * r; ++b) {
        ++cases;
        QClass nf = q_normal_form(
            IntPoly::monomial(kHXiQVars, {a, b, 0}, 1), rel);
        if (!in_basis_box(nf))
          f.record(s.describe() + ": h^" + std::to_string(a) + " xi^" +
                   std::to_string(b) + " escapes the basis box");
        for (const auto& [ijk, v] : nf.coeff)
          if (std::get<0>(ijk) + std::get<1>(ijk) + std::get<2>(ijk) !=
              a + b)
            f.record(s.describe() + ": reduction broke the grading");
      }
    }
  }
  return finish("quantum-quotient-soundness", f, cases);
}

CheckResult check_segre_inverse(const GridBounds& g) {
  Failure f;
  long cases = 0;
  const int order = 10;
  for (const BundleSpec& s : split_grid(g)) {
    ++cases;
    std::vector<Int> seg = segre_classes(s, order);
    TruncSeries signed_segre("t", order, true);
    for (int i = 0; i <= order; ++i)
      signed_segre.set_coeff(i, Rat((i % 2 == 0) ? seg[i] : -seg[i]));
    std::vector<LinearFactor> factors;
    for (int m : s.splitting()) factors.push_back({m, 1});
    TruncSeries total_chern = series_expand(factors, order);
    if (!(signed_segre * total_chern == TruncSeries::one("t", order)))
      f.record(s.describe() + ": Segre series times total Chern class != 1");
  }
  return finish("segre-inverse-identity", f, cases);
}

CheckResult check_geometry_formulas(const GridBounds& g) {
  Failure f;
  long cases = 0;
  std::vector<BundleSpec> grid = split_grid(g);

  // Anticanonical degree: closed form against the ring pairing
  // integral of ((n+1-c_1) h + r xi) cup (a h^{n-1} xi^{r-1} + b h^n xi^{r-2}).
  std::mt19937_64 rng(0x9eu);
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
  std::uniform_int_distribution<long> ab(-10, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    ++cases;
    const BundleSpec& s = grid[pick(rng)];
    CurveClass A{ab(rng), ab(rng)};
    IntPoly minus_k(kHXiVars);
    minus_k.add_term({1, 0}, Int(s.n() + 1) - s.c(1));
    minus_k.add_term({0, 1}, s.r());
    IntPoly cycle(kHXiVars);
    cycle.add_term({s.n() - 1, s.r() - 1}, A.a);
    cycle.add_term({s.n(), s.r() - 2}, A.b);
    Int paired = integrate(normal_form_classical(minus_k * cycle, s));
    if (paired != anticanonical_degree(s, A)) {
      f.record(s.describe() + ": -K degree of (" + std::to_string(A.a) +
               "," + std::to_string(A.b) + ") differs from the pairing");
      break;
    }
  }

  // Obstruction rank equals the degree of the obstruction Euler class.
  for (const BundleSpec& s : grid) {
    if (s.m1() != 1) continue;
    ++cases;
    SymPoly e = euler_cob(s);
    long deg = e.poly().is_zero() ? 0 : e.poly().total_degree();
    if (deg != obstruction_rank(s) || obstruction_rank(s) < 0)
      f.record(s.describe() + ": obstruction rank != Euler class degree");
  }

  // Moduli dimensions on the worked instances.
  ++cases;
  ModuliDim d1 = moduli_dimension(BundleSpec::split(2, {1, 1, 2}), 1);
  ModuliDim d2 = moduli_dimension(BundleSpec::split(3, {1, 2}), 2);
  ModuliDim d3 = moduli_dimension(BundleSpec::split(2, {2, 2}), 1);
  if (d1.kind != ModuliDim::Kind::Value || d1.dim != 6 ||
      d2.kind != ModuliDim::Kind::Value || d2.dim != 9 ||
      d3.kind != ModuliDim::Kind::Empty)
    f.record("moduli dimension worked examples failed");

  return finish("geometry-formulas", f, cases);
}

std::vector<CheckResult> run_all_checks(const GridBounds& g) {
  // An escaped exception marks its criterion failed instead of aborting the
  // remaining ones.
  auto guarded = [](const char* name, auto&& run) {
    try {
      return run();
    } catch (const std::exception& e) {
      return CheckResult{name, false, 0, std::string("exception: ") + e.what()};
    }
  };
  return {
      guarded("w-two-path", [&] { return check_w_two_path(g); }),
      guarded("w-classical-pairing", [&] { return check_w_classical_pairing(g); }),
      guarded("split-relation-goldens", [] { return check_split_relation_goldens(); }),
      guarded("tangent-two-way", [] { return check_tangent_two_way(); }),
      guarded("schubert-integrals", [] { return check_schubert_integrals(); }),
      guarded("quantum-quotient-soundness", [&] { return check_quantum_soundness(g); }),
      guarded("segre-inverse-identity", [&] { return check_segre_inverse(g); }),
      guarded("geometry-formulas", [&] { return check_geometry_formulas(g); }),
  };
}

}  // namespace qpb
