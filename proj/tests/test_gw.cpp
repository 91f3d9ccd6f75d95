#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpb/checks.hpp"
#include "qpb/errors.hpp"
#include "qpb/gw.hpp"

using qpb::BundleSpec;
using qpb::CurveClass;
using qpb::GwQuery;
using qpb::GwResult;
using qpb::Int;

namespace {

GwQuery query(const BundleSpec& s, CurveClass a,
              std::vector<std::pair<int, int>> ins) {
  return GwQuery{s, a, std::move(ins)};
}

CurveClass section_class(const BundleSpec& s) {
  return {1, s.m1() - s.c1()};
}

}  // namespace

TEST_CASE("degree deficits") {
  BundleSpec s = BundleSpec::split(3, {1, 1, 2});
  const int n = s.n(), r = s.r();
  // Fiber class, balanced: 1 + (r-1) + (n+r-1) against (n+r-1) + r.
  CHECK(qpb::degree_deficit(query(s, {0, 1},
                                  {{0, 1}, {0, r - 1}, {n, r - 1}})) == 0);
  // Section class with m_1 = 1, the leading-coefficient query.
  int c1 = static_cast<int>(s.c1());
  CHECK(qpb::degree_deficit(query(s, section_class(s),
                                  {{1, 0}, {n, 0}, {n, 2 * r - c1 - 1}})) ==
        0);
  // Off by one.
  CHECK(qpb::degree_deficit(query(s, {0, 1},
                                  {{0, 1}, {0, r - 1}, {n, r - 2}})) == -1);
  CHECK(qpb::degree_deficit(query(s, {0, 1},
                                  {{1, 1}, {0, r - 1}, {n, r - 1}})) == 1);
}

TEST_CASE("expected dimensions") {
  BundleSpec s = BundleSpec::split(4, {1, 1, 3});
  const int n = s.n(), r = s.r();
  CHECK(qpb::expected_dim(s, {0, 1}) == n + 2 * r - 4);
  CHECK(qpb::expected_dim(s, section_class(s)) ==
        2 * n + 2 * r - static_cast<int>(s.c1()) - 3);
  CHECK(qpb::expected_dim(s, {0, 0}) == n + r - 4);
}

TEST_CASE("fiber-line invariant") {
  CHECK(qpb::gw_fiber_line(BundleSpec::split(2, {1, 1, 2})) == 1);
  CHECK(qpb::gw_fiber_line(BundleSpec::tangent(2)) == 1);
  CHECK(qpb::gw_fiber_line(BundleSpec::split(1, {1, 2})) == 1);
  CHECK_THROWS_AS(qpb::gw_fiber_line(BundleSpec::split(3, {2})),
                  std::invalid_argument);
}

TEST_CASE("vanishing for fiber-class multiples") {
  BundleSpec r1 = BundleSpec::split(2, {1});
  CHECK(qpb::gw_vanishes_fiber_multiple(r1, 1, 0, 0));
  BundleSpec s = BundleSpec::split(2, {1, 1, 2});
  CHECK_FALSE(qpb::gw_vanishes_fiber_multiple(s, 1, 1, 2));  // boundary q1+q2=r
  CHECK(qpb::gw_vanishes_fiber_multiple(s, 3, 1, 1));
  CHECK_THROWS_AS(qpb::gw_vanishes_fiber_multiple(s, 0, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("two-route section invariants") {
  BundleSpec s = BundleSpec::split(2, {1, 1, 2});
  CHECK(qpb::gw_W(s, 0) == 1);
  CHECK(qpb::gw_W(s, 1) == 2);

  for (int r = 2; r <= 5; ++r) {
    std::vector<int> ones(static_cast<std::size_t>(r), 1);
    CHECK(qpb::gw_W(BundleSpec::split(3, ones), 0) == 1);
  }

  BundleSpec t = BundleSpec::split(4, {1, 1, 1, 3});
  CHECK(qpb::gw_W(t, 0) == 1);
  CHECK(qpb::gw_W(t, 1) == 0);
  CHECK(qpb::gw_W(t, 2) == -3);

  CHECK_THROWS_AS(qpb::gw_W(BundleSpec::split(4, {1, 3}), 0),
                  qpb::hypothesis_error);
}

TEST_CASE("the leading section invariant is 1 on the whole grid") {
  for (const qpb::BundleSpec& s : qpb::split_grid({6, 5, 4})) {
    if (s.m1() != 1 || s.c1() >= 2 * s.r() ||
        2 * s.c1() >= s.n() + 1 + 2 * s.r())
      continue;
    CHECK(qpb::gw_W(s, 0) == 1);
  }
}

TEST_CASE("a nonzero degree deficit forces a known zero") {
  std::mt19937_64 rng(31337);
  auto grid = qpb::split_grid({4, 4, 3});
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
  std::uniform_int_distribution<long> ab(-3, 3);
  int unbalanced = 0;
  while (unbalanced < 200) {
    const qpb::BundleSpec& s = grid[pick(rng)];
    std::uniform_int_distribution<int> ii(0, s.n());
    std::uniform_int_distribution<int> jj(0, s.r() - 1);
    GwQuery q = query(s, {ab(rng), ab(rng)},
                      {{ii(rng), jj(rng)}, {ii(rng), jj(rng)}, {ii(rng), jj(rng)}});
    if (qpb::degree_deficit(q) == 0) continue;
    ++unbalanced;
    GwResult res = qpb::gw_lookup(q);
    CHECK(res.known);
    CHECK(res.value == 0);
  }
}

TEST_CASE("tangent-bundle catalog constants") {
  CHECK(qpb::gw_tangent_h_coefficient(3) == 3);
  CHECK(qpb::gw_tangent_unit_count(2, 1, 0, 1, 0) == 1);
  for (int n = 2; n <= 6; ++n) CHECK(qpb::gw_tangent_xi_leading(n) == 1);
  CHECK_THROWS_AS(qpb::gw_tangent_h_coefficient(1), std::invalid_argument);
  // max(j,k) > 0 violated.
  CHECK_THROWS_AS(qpb::gw_tangent_unit_count(2, 0, 0, 1, 1),
                  std::invalid_argument);
  // degrees off.
  CHECK_THROWS_AS(qpb::gw_tangent_unit_count(3, 1, 0, 1, 0),
                  std::invalid_argument);
}

TEST_CASE("catalog lookups") {
  BundleSpec s = BundleSpec::split(2, {1, 1, 2});
  const int n = s.n(), r = s.r();
  const int c1 = static_cast<int>(s.c1());

  // Degree balance broken: known zero.
  GwResult res = qpb::gw_lookup(query(s, {0, 1}, {{0, 1}, {0, 1}, {0, 1}}));
  CHECK(res.known);
  CHECK(res.value == 0);
  CHECK(res.provenance == qpb::provenance::kDegreeBalance);

  // Classical triple product at curve class zero.
  res = qpb::gw_lookup(query(s, {0, 0}, {{n, 0}, {0, r - 1}, {0, 0}}));
  CHECK(res.known);
  CHECK(res.value == 1);
  CHECK(res.provenance == qpb::provenance::kClassicalCup);

  // Fiber line.
  res = qpb::gw_lookup(query(s, {0, 1}, {{0, 1}, {0, r - 1}, {n, r - 1}}));
  CHECK(res.known);
  CHECK(res.value == 1);
  CHECK(res.provenance == qpb::provenance::kFiberLine);

  // Fiber-class vanishing (balanced degrees, small xi-degrees).
  res = qpb::gw_lookup(query(s, {0, 1}, {{2, 1}, {2, 1}, {1, 0}}));
  CHECK(res.known);
  CHECK(res.value == 0);
  CHECK(res.provenance == qpb::provenance::kFiberVanishing);

  // W_1 through the catalog.
  res = qpb::gw_lookup(
      query(s, section_class(s), {{1, 0}, {2, 0}, {1, 2 * r - c1}}));
  CHECK(res.known);
  CHECK(res.value == 2);
  CHECK(res.provenance == qpb::provenance::kTwoPathW);

  // Section-ray multiples are unresolved.
  res = qpb::gw_lookup(query(s, {2, -5}, {{2, 2}, {2, 2}, {1, 2}}));
  CHECK_FALSE(res.known);

  // xi-degree below every summand: empty moduli.
  BundleSpec high = BundleSpec::split(2, {2, 2});
  res = qpb::gw_lookup(
      query(high, {1, -3}, {{1, 0}, {1, 1}, {0, 1}}));
  CHECK(res.known);
  CHECK(res.value == 0);
  CHECK(res.provenance == qpb::provenance::kEmptyModuli);
}

TEST_CASE("catalog lookups on the tangent bundle") {
  for (int n : {2, 3, 5}) {
    BundleSpec t = BundleSpec::tangent(n);
    GwResult res = qpb::gw_lookup(
        query(t, {1, -n}, {{1, 0}, {n, 0}, {n - 1, n - 1}}));
    CHECK(res.known);
    CHECK(res.value == n);
    CHECK(res.provenance == qpb::provenance::kTangentH);

    if (n >= 2) {
      res = qpb::gw_lookup(query(t, {1, -n}, {{1, 0}, {n, 0}, {n, n - 2}}));
      CHECK(res.known);
      CHECK(res.value == 1);
      CHECK(res.provenance == qpb::provenance::kCobLeading);
    }

    res = qpb::gw_lookup(
        query(t, {1, -n}, {{1, 0}, {n - 1, 0}, {n, n - 1}}));
    CHECK(res.known);
    CHECK(res.value == 1);
    CHECK(res.provenance == qpb::provenance::kTangentUnit);
  }
}
