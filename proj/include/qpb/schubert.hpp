#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpb/bundle.hpp"
#include "qpb/intpoly.hpp"

namespace qpb {

inline const std::vector<std::string> kGrassVars = {"alpha", "beta", "ht"};

/// Polynomial in the Chern roots alpha, beta of the dual tautological
/// subbundle on G(2, n+1) and the hyperplane class ht of an auxiliary
/// projective-space factor P^{k-1}, with ht nilpotent of order k when a
/// nilpotency order is declared.
class SymPoly {
public:
  SymPoly() : poly_(kGrassVars) {}
  explicit SymPoly(IntPoly p, std::optional<int> ht_order = std::nullopt);

  static SymPoly constant(Int c, std::optional<int> ht_order = std::nullopt);
  static SymPoly ht(std::optional<int> ht_order = std::nullopt);

  const IntPoly& poly() const { return poly_; }
  std::optional<int> ht_order() const { return ht_order_; }
  bool ht_free() const;
  bool symmetric() const;  // invariant under alpha <-> beta

  SymPoly operator*(const SymPoly& o) const;
  SymPoly operator+(const SymPoly& o) const;
  bool operator==(const SymPoly& o) const;

  /// Terms with the given ht-exponent, as a polynomial in alpha, beta.
  SymPoly ht_coefficient(int e) const;

  std::string str() const { return poly_.str(); }

private:
  void normalize();
  static std::optional<int> merge_orders(const SymPoly& a, const SymPoly& b);

  IntPoly poly_;
  std::optional<int> ht_order_;
};

/// Class of lines meeting a fixed codimension-p linear subspace of P^n:
/// sum_{i=0..p-1} alpha^i beta^{p-1-i}. Requires p >= 1 (p = 0 is the
/// vacuous condition and is rejected).
SymPoly sigma_meet(int p);

/// Intersection number of a symmetric ht-free class on G(2, n+1): minus one
/// half of the alpha^n beta^n coefficient of (alpha-beta)^2 P. Components of
/// degree other than 2n-2 integrate to zero, so mixed-degree input is fine;
/// asymmetric input is rejected. The halving is exact (evenness asserted).
Int integrate_g2(const SymPoly& P, int n);

/// Euler class of the obstruction bundle over G(2, n+1) x P^{k-1} for a
/// split spec with m_1 = 1:
///   prod_{u>k} prod_{v=0}^{m_u-3} [-(1+v) alpha - (m_u-2-v) beta + ht],
/// the empty product being 1. Total degree c_1 + k - 2r.
SymPoly euler_cob(const BundleSpec& spec);

/// Three-point invariant W_i of the section class, evaluated as an
/// intersection integral over G(2, n+1) x P^{k-1}. Requires m_1 = 1,
/// c_1 < 2r, 2c_1 < n+1+2r and 0 <= i <= c_1 - r; a violated bound is
/// reported with the failing inequality.
Int gw_integral_W(const BundleSpec& spec, int i);

}  // namespace qpb
