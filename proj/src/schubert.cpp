#include "qpb/schubert.hpp"

#include <sstream>
#include <stdexcept>

#include "qpb/errors.hpp"

namespace qpb {

namespace {
constexpr std::size_t kAlpha = 0;
constexpr std::size_t kBeta = 1;
constexpr std::size_t kHt = 2;
}  // namespace

SymPoly::SymPoly(IntPoly p, std::optional<int> ht_order)
    : poly_(std::move(p)), ht_order_(ht_order) {
  if (poly_.vars() != kGrassVars)
    throw std::invalid_argument("expected a polynomial in alpha, beta, ht");
  normalize();
}

SymPoly SymPoly::constant(Int c, std::optional<int> ht_order) {
  return SymPoly(IntPoly::constant(kGrassVars, std::move(c)), ht_order);
}

SymPoly SymPoly::ht(std::optional<int> ht_order) {
  return SymPoly(IntPoly::variable(kGrassVars, "ht"), ht_order);
}

void SymPoly::normalize() {
  if (ht_order_) poly_ = poly_.drop_above(kHt, *ht_order_ - 1);
}

std::optional<int> SymPoly::merge_orders(const SymPoly& a, const SymPoly& b) {
  if (a.ht_order_ && b.ht_order_) {
    if (*a.ht_order_ != *b.ht_order_)
      throw std::invalid_argument("ht nilpotency orders differ");
    return a.ht_order_;
  }
  return a.ht_order_ ? a.ht_order_ : b.ht_order_;
}

bool SymPoly::ht_free() const { return poly_.degree_in(kHt) <= 0; }

bool SymPoly::symmetric() const {
  return poly_.swap_vars(kAlpha, kBeta) == poly_;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
  return SymPoly(poly_ * o.poly_, merge_orders(*this, o));
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  return SymPoly(poly_ + o.poly_, merge_orders(*this, o));
}

bool SymPoly::operator==(const SymPoly& o) const { return poly_ == o.poly_; }

SymPoly SymPoly::ht_coefficient(int e) const {
  return SymPoly(poly_.coeff_of(kHt, e), ht_order_);
}

SymPoly sigma_meet(int p) {
  if (p < 1)
    throw std::invalid_argument("sigma_meet: vacuous codimension p = 0");
  IntPoly s(kGrassVars);
  for (int i = 0; i <= p - 1; ++i) s.add_term({i, p - 1 - i, 0}, 1);
  return SymPoly(std::move(s));
}

Int integrate_g2(const SymPoly& P, int n) {
  if (!P.ht_free())
    throw std::invalid_argument("integrate_g2: input still involves ht");
  if (!P.symmetric())
    throw std::invalid_argument("integrate_g2: input is not symmetric");
  IntPoly delta2(kGrassVars);  // (alpha - beta)^2
  delta2.add_term({2, 0, 0}, 1);
  delta2.add_term({1, 1, 0}, -2);
  delta2.add_term({0, 2, 0}, 1);
  Int c = (delta2 * P.poly()).coeff({n, n, 0});
  // Even for symmetric P; the -1/2 resolves exactly.
  if (mpz_odd_p(c.get_mpz_t()))
    throw invariant_error("odd alpha^n beta^n coefficient");
  return -c / 2;
}

SymPoly euler_cob(const BundleSpec& spec) {
  if (spec.m1() != 1)
    throw std::invalid_argument("euler_cob requires m_1 = 1");
  const auto& m = spec.splitting();
  const int k = spec.k();
  SymPoly e = SymPoly::constant(1, k);
  for (int u = k; u < spec.r(); ++u) {
    for (int v = 0; v <= m[static_cast<std::size_t>(u)] - 3; ++v) {
      IntPoly f(kGrassVars);
      f.add_term({1, 0, 0}, -(1 + v));
      f.add_term({0, 1, 0}, -(m[static_cast<std::size_t>(u)] - 2 - v));
      f.add_term({0, 0, 1}, 1);
      e = e * SymPoly(std::move(f), k);
    }
  }
  return e;
}

Int gw_integral_W(const BundleSpec& spec, int i) {
  const long c1 = spec.c1();
  const int n = spec.n();
  const int r = spec.r();
  if (!spec.is_split() || spec.m1() != 1)
    throw hypothesis_error("split bundle with m_1 = 1 required");
  if (!(c1 < 2 * r))
    throw hypothesis_error("c_1 < 2r fails: " + std::to_string(c1) +
                           " >= " + std::to_string(2 * r));
  if (!(2 * c1 < n + 1 + 2 * r))
    throw hypothesis_error("2c_1 < n+1+2r fails: " + std::to_string(2 * c1) +
                           " >= " + std::to_string(n + 1 + 2 * r));
  if (i < 0 || i > c1 - r)
    throw hypothesis_error("index i outside 0 <= i <= c_1 - r");

  const int k = spec.k();
  // Lines meeting an empty subspace give zero; a vacuous condition gives the
  // fundamental class.
  auto sigma_on = [n](int p) {
    if (p > n) return SymPoly(IntPoly(kGrassVars));
    if (p == 0) return SymPoly::constant(1);
    return sigma_meet(p);
  };

  const int ntilde = (n + 1) / 2;
  const int top = static_cast<int>(2 * r - c1 - 1) + i;
  SymPoly bracket = SymPoly(IntPoly(kGrassVars), k);
  for (int j = 0; j <= top; ++j) {
    if (top - j >= k) continue;  // ht^{top-j} = 0
    bracket = bracket + SymPoly(sigma_on(n - i + j).poly().times_monomial(
                                    {0, 0, top - j}, binom(top, j)),
                                k);
  }
  SymPoly integrand =
      SymPoly(sigma_on(ntilde).poly(), k) *
      SymPoly(sigma_on(n + 1 - ntilde).poly(), k) * bracket * euler_cob(spec);
  return integrate_g2(integrand.ht_coefficient(k - 1), n);
}

}  // namespace qpb
