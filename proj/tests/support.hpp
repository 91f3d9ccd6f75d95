#pragma once

#include <random>
#include <vector>

#include "qpb/ints.hpp"
#include "qpb/intpoly.hpp"

namespace qpb::test {

/// Fraction-free (Bareiss) determinant; exact over Int.
inline Int det_bareiss(std::vector<std::vector<Int>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        Int q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = q;
      }
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

/// Dense bivariate polynomial in two symbols with machine coefficients;
/// independent oracle for the Grassmannian integrals.
struct Dense2 {
  // c[i][j] is the coefficient of x^i y^j.
  std::vector<std::vector<long long>> c;

  explicit Dense2(int max_deg)
      : c(static_cast<std::size_t>(max_deg) + 1,
          std::vector<long long>(static_cast<std::size_t>(max_deg) + 1, 0)) {}

  static Dense2 mul(const Dense2& a, const Dense2& b) {
    Dense2 r(static_cast<int>(a.c.size() + b.c.size()) - 2);
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < a.c.size(); ++j) {
        if (a.c[i][j] == 0) continue;
        for (std::size_t s = 0; s < b.c.size(); ++s)
          for (std::size_t t = 0; t < b.c.size(); ++t)
            r.c[i + s][j + t] += a.c[i][j] * b.c[s][t];
      }
    return r;
  }
};

/// -1/2 of the x^n y^n coefficient of (x-y)^2 P, by dense expansion.
inline long long integrate_g2_oracle(const Dense2& p, int n) {
  Dense2 delta(2);
  delta.c[2][0] = 1;
  delta.c[1][1] = -2;
  delta.c[0][2] = 1;
  Dense2 q = Dense2::mul(delta, p);
  long long coeff = q.c[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
  return -coeff / 2;
}

inline IntPoly random_poly(const std::vector<std::string>& vars, int max_exp,
                           int max_terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  IntPoly p(vars);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    IntPoly::Exponents e(vars.size());
    for (auto& x : e) x = exp(rng);
    int c = coef(rng);
    p.add_term(e, c == 0 ? 1 : c);
  }
  return p;
}

}  // namespace qpb::test
