#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpb/intpoly.hpp"
#include "support.hpp"

using qpb::Int;
using qpb::IntPoly;

namespace {
const std::vector<std::string> xy = {"x", "y"};

IntPoly X() { return IntPoly::variable(xy, "x"); }
IntPoly Y() { return IntPoly::variable(xy, "y"); }
IntPoly C(long v) { return IntPoly::constant(xy, v); }
}  // namespace

TEST_CASE("construction and basic arithmetic") {
  IntPoly p = X() + Y();
  CHECK(p.coeff({1, 0}) == 1);
  CHECK(p.coeff({0, 1}) == 1);
  CHECK(p.coeff({0, 0}) == 0);

  IntPoly q = p * p;  // x^2 + 2xy + y^2
  CHECK(q.coeff({2, 0}) == 1);
  CHECK(q.coeff({1, 1}) == 2);
  CHECK(q.coeff({0, 2}) == 1);
  CHECK(q.total_degree() == 2);
  CHECK(q.homogeneous_degree() == 2);

  CHECK((p - p).is_zero());
  CHECK((p + (-p)).is_zero());
  CHECK(C(0).is_zero());
}

TEST_CASE("no zero coefficients are stored") {
  IntPoly p = X() - X();
  CHECK(p.terms().empty());
  IntPoly q = (X() + Y()) * (X() - Y());  // x^2 - y^2, xy terms cancel
  CHECK(q.terms().size() == 2);
}

TEST_CASE("negative exponents are rejected") {
  CHECK_THROWS_AS(IntPoly::monomial(xy, {-1, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(X().pow(-2), std::invalid_argument);
}

TEST_CASE("mixing variable lists is rejected") {
  IntPoly other = IntPoly::variable({"z"}, "z");
  CHECK_THROWS_AS(X() + other, std::invalid_argument);
}

TEST_CASE("pow and scaling") {
  IntPoly p = (X() + C(1)).pow(4);
  for (int i = 0; i <= 4; ++i)
    CHECK(p.coeff({i, 0}) == qpb::binom(4, i));
  CHECK(p.pow(0) == C(1));
  CHECK(X().scaled(0).is_zero());
}

TEST_CASE("slicing helpers") {
  IntPoly p = (X() + Y()).pow(3);
  // Coefficient of y^1 is 3x^2 with the y slot zeroed.
  IntPoly c1 = p.coeff_of(1, 1);
  CHECK(c1.coeff({2, 0}) == 3);
  CHECK(c1.terms().size() == 1);
  CHECK(p.drop_above(1, 1).terms().size() == 2);
  CHECK(p.subst_zero(1) == IntPoly::monomial(xy, {3, 0}, 1));
  CHECK(p.swap_vars(0, 1) == p);
  IntPoly asym = X() * X() + Y();
  CHECK(asym.swap_vars(0, 1) == Y() * Y() + X());
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    IntPoly a = qpb::test::random_poly(xy, 4, 4, rng);
    IntPoly b = qpb::test::random_poly(xy, 4, 4, rng);
    IntPoly c = qpb::test::random_poly(xy, 4, 4, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("deterministic lexicographic rendering") {
  IntPoly p = Y() * Y() - X() * Y() * C(3) + C(7);
  CHECK(p.str() == "7 + y^2 - 3 x y");
  CHECK(C(0).str() == "0");
  CHECK((-X()).str() == "-x");
}
