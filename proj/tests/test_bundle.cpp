#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpb/bundle.hpp"
#include "qpb/checks.hpp"
#include "qpb/series.hpp"

using qpb::BundleSpec;
using qpb::Int;

TEST_CASE("Chern numbers of a splitting type") {
  auto c = qpb::chern_from_splitting({1, 2});
  CHECK(c == std::vector<Int>{1, 3, 2});
  c = qpb::chern_from_splitting({1, 1, 2});
  CHECK(c == std::vector<Int>{1, 4, 5, 2});
  // All-ones gives the binomial row.
  c = qpb::chern_from_splitting({1, 1, 1, 1, 1});
  for (int i = 0; i <= 5; ++i) CHECK(c[static_cast<std::size_t>(i)] == qpb::binom(5, i));
  CHECK_THROWS_AS(qpb::chern_from_splitting({}), std::invalid_argument);
}

TEST_CASE("spec construction and validation") {
  BundleSpec s = BundleSpec::split(3, {2, 1, 1});
  CHECK(s.splitting() == std::vector<int>{1, 1, 2});  // sorted on entry
  CHECK(s.r() == 3);
  CHECK(s.m1() == 1);
  CHECK(s.k() == 2);
  CHECK(s.c1() == 4);
  CHECK(s.dim() == 5);
  CHECK_THROWS_AS(BundleSpec::split(2, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(BundleSpec::split(0, {1}), std::invalid_argument);

  BundleSpec t = BundleSpec::tangent(4);
  CHECK(t.r() == 4);
  for (int i = 0; i <= 4; ++i) CHECK(t.c(i) == qpb::binom(5, i));
  CHECK_THROWS_AS(t.splitting(), std::invalid_argument);
}

TEST_CASE("twisting") {
  BundleSpec s = BundleSpec::split(2, {2, 3});
  CHECK(s.normalized() == BundleSpec::split(2, {1, 2}));
  CHECK(s.twisted(1) == BundleSpec::split(2, {3, 4}));
  CHECK_THROWS_AS(s.twisted(-2), std::invalid_argument);  // degree 0 summand
}

TEST_CASE("Segre numbers by recursion") {
  BundleSpec s = BundleSpec::split(3, {1, 2});
  auto seg = qpb::segre_classes(s, 3);
  CHECK(seg == std::vector<Int>{1, -3, 7, -15});

  // First step of the recursion is always -c_1.
  for (auto spec : {BundleSpec::split(2, {1, 1, 3}), BundleSpec::tangent(3)})
    CHECK(qpb::segre_classes(spec, 1)[1] == -spec.c(1));

  // 1/(1-t)^2 expansion.
  BundleSpec ones = BundleSpec::split(2, {1, 1});
  auto seg2 = qpb::segre_classes(ones, 5);
  for (int i = 0; i <= 5; ++i) {
    Int want = (i % 2 == 0) ? Int(i + 1) : Int(-(i + 1));
    CHECK(seg2[static_cast<std::size_t>(i)] == want);
  }
}

TEST_CASE("Segre numbers agree with the inverse-Chern series") {
  for (const BundleSpec& s : qpb::split_grid({3, 4, 4})) {
    if (s.n() != 1) continue;  // the identity is independent of n
    const int order = 8;
    auto seg = qpb::segre_classes(s, order);
    std::vector<qpb::LinearFactor> inv;
    for (int m : s.splitting()) inv.push_back({m, -1});
    qpb::TruncSeries series = qpb::series_expand(inv, order);
    for (int i = 0; i <= order; ++i) {
      Int want = (i % 2 == 0) ? seg[static_cast<std::size_t>(i)]
                              : -seg[static_cast<std::size_t>(i)];
      CHECK(series.int_coeff(i) == want);
    }
  }
}
