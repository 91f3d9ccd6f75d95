#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpb/checks.hpp"
#include "qpb/fano.hpp"
#include "qpb/schubert.hpp"

using qpb::BundleSpec;
using qpb::CurveClass;
using qpb::ExtremalA2;
using qpb::HypothesisReport;
using qpb::Int;
using qpb::ModuliDim;

TEST_CASE("anticanonical degree closed form") {
  BundleSpec s = BundleSpec::split(3, {1, 1, 2});
  CHECK(qpb::anticanonical_degree(s, {0, 1}) == s.r());
  CHECK(qpb::anticanonical_degree(s, {1, 1 - static_cast<long>(s.c1())}) ==
        s.n() + 1 + s.r() - s.c1());
  CHECK(qpb::anticanonical_degree(s, {0, 0}) == 0);

  // At the section class (1, m_1 - c_1) the degree is (n+1-c_1) + r m_1.
  for (const BundleSpec& g : qpb::split_grid({4, 4, 4})) {
    CurveClass a2{1, g.m1() - g.c1()};
    CHECK(qpb::anticanonical_degree(g, a2) ==
          Int(g.n() + 1) - g.c1() + Int(g.r()) * g.m1());
  }
}

TEST_CASE("section class and its extremal-ray certificate") {
  ExtremalA2 e = qpb::extremal_A2(BundleSpec::split(5, {1, 1, 2}));
  CHECK(e.a2 == CurveClass{1, -3});
  CHECK(e.cert == ExtremalA2::Cert::NefDivisor);  // 2c_1 = 8 > n+1 = 6

  e = qpb::extremal_A2(BundleSpec::split(2, {1, 1}));
  CHECK(e.a2 == CurveClass{1, -1});
  CHECK(e.cert == ExtremalA2::Cert::NefDivisor);  // 4 > 3

  e = qpb::extremal_A2(BundleSpec::split(6, {1, 2}));
  CHECK(e.a2 == CurveClass{1, -2});
  CHECK(e.cert == ExtremalA2::Cert::SmallC1Bound);  // 6 <= 7
}

TEST_CASE("moduli dimensions") {
  ModuliDim d = qpb::moduli_dimension(BundleSpec::split(2, {1, 1, 2}), 1);
  CHECK(d.kind == ModuliDim::Kind::Value);
  CHECK(d.dim == 6);  // 2n + k

  d = qpb::moduli_dimension(BundleSpec::split(3, {1, 2}), 2);
  CHECK(d.kind == ModuliDim::Kind::Value);
  CHECK(d.dim == 9);  // 2n + r + rm - c_1

  d = qpb::moduli_dimension(BundleSpec::split(2, {2, 2}), 1);
  CHECK(d.kind == ModuliDim::Kind::Empty);

  d = qpb::moduli_dimension(BundleSpec::split(2, {1, 2, 4}), 3);
  CHECK(d.kind == ModuliDim::Kind::NotCovered);

  // All twists equal: both formulas apply and agree, 2n+k = 2n+r.
  d = qpb::moduli_dimension(BundleSpec::split(3, {2, 2}), 2);
  CHECK(d.kind == ModuliDim::Kind::Value);
  CHECK(d.dim == 2 * 3 + 2);
}

TEST_CASE("obstruction ranks") {
  CHECK(qpb::obstruction_rank(BundleSpec::split(2, {1, 1, 3})) == 1);
  CHECK(qpb::obstruction_rank(BundleSpec::split(2, {1, 1, 1, 1})) == 0);
  CHECK(qpb::obstruction_rank(BundleSpec::split(2, {1, 4})) == 2);
  CHECK_THROWS_AS(qpb::obstruction_rank(BundleSpec::split(2, {2, 2})),
                  std::invalid_argument);

  for (const BundleSpec& s : qpb::split_grid({3, 4, 4})) {
    if (s.m1() != 1) continue;
    long rank = qpb::obstruction_rank(s);
    CHECK(rank >= 0);
    qpb::SymPoly e = qpb::euler_cob(s);
    CHECK(rank == (e.poly().is_zero() ? 0 : e.poly().total_degree()));
  }
}

TEST_CASE("hypothesis flags") {
  HypothesisReport rep =
      qpb::classify_hypotheses(BundleSpec::split(2, {1, 1, 2}));
  CHECK(rep.split_closed_form_bound);  // 4 < min(6, 4.5, 4.5)

  rep = qpb::classify_hypotheses(BundleSpec::split(2, {1, 2, 2}));
  CHECK_FALSE(rep.split_closed_form_bound);  // 5 >= 4.5

  rep = qpb::classify_hypotheses(BundleSpec::tangent(2));
  CHECK(rep.f1_single_ray_bound);
  CHECK(rep.f2_single_ray_bound);
  CHECK(rep.template_twist_nef);
  CHECK(rep.twist_nef);
  // The closed-form split relations never apply to the tangent bundle,
  // whatever the numbers say.
  CHECK_FALSE(rep.split_closed_form_bound);
}

TEST_CASE("closed-form bound implies the single-ray bounds") {
  for (const BundleSpec& s : qpb::split_grid({6, 5, 4})) {
    HypothesisReport rep = qpb::classify_hypotheses(s);
    if (!rep.split_closed_form_bound) continue;
    CHECK(rep.f1_single_ray_bound);
    CHECK(rep.f2_single_ray_bound);
    CHECK(rep.leading_coeff_bound);
  }
}
