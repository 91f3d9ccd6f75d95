#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpb/bundle.hpp"
#include "qpb/ints.hpp"

namespace qpb {

/// A three-or-more-point genus-zero invariant query: curve class plus the
/// list of insertion classes, each a basis monomial h^i xi^j recorded as the
/// exponent pair (i, j).
struct GwQuery {
  BundleSpec spec;
  CurveClass curve;
  std::vector<std::pair<int, int>> insertions;
};

/// Total complex degree of the insertions minus the balanced value
/// (n+r-1) + deg(-K)(A). Zero exactly when the query is degree-balanced; a
/// nonzero deficit forces the invariant to vanish.
long degree_deficit(const GwQuery& q);

/// Expected dimension deg(-K)(A) + (n+r-1) - 3 of the (projectivized)
/// moduli space of maps in class A.
Int expected_dim(const BundleSpec& spec, const CurveClass& A);

/// The unique fiber line through a point meeting a hyperplane section of a
/// fiber: always 1. Requires r >= 2.
Int gw_fiber_line(const BundleSpec& spec);

/// True iff q1 + q2 < r, in which case every three-point invariant of a
/// fiber class multiple b >= 1 with insertions of xi-degrees q1, q2
/// vanishes, whatever the third insertion.
bool gw_vanishes_fiber_multiple(const BundleSpec& spec, long b, int q1,
                                int q2);

/// The section-class invariant W_i computed along BOTH routes — the
/// coefficient of t^i in prod (1 - m_u t)^{m_u - 2} and the intersection
/// integral over G(2, n+1) x P^{k-1} — with equality asserted. A path
/// disagreement is an internal failure, distinct from a refused hypothesis.
Int gw_W(const BundleSpec& spec, int i);

/// Tangent-bundle invariants of the section class A_2 = (1, -n), n >= 2.
/// Insertions (h, h^n, h^{n-1} xi^{n-1}); the value is n.
Int gw_tangent_h_coefficient(int n);
/// Insertions (h^j xi^k, h^s xi^t, h^n xi^{n-1}) with max(j,k) > 0,
/// max(s,t) > 0 and j+k+s+t = n; the value is 1.
Int gw_tangent_unit_count(int n, int j, int k, int s, int t);
/// Insertions (h, h^n, h^n xi^{n-2}); the value is 1.
Int gw_tangent_xi_leading(int n);

/// Stable provenance tags for catalog answers.
namespace provenance {
inline constexpr const char* kDegreeBalance = "degree-balance";
inline constexpr const char* kClassicalCup = "classical-cup";
inline constexpr const char* kFiberLine = "fiber-line";
inline constexpr const char* kFiberVanishing = "fiber-vanishing";
inline constexpr const char* kEmptyModuli = "empty-moduli";
inline constexpr const char* kTwoPathW = "w-series-integral";
inline constexpr const char* kCobLeading = "cob-euler-leading";
inline constexpr const char* kTangentH = "tangent-h-coefficient";
inline constexpr const char* kTangentUnit = "tangent-unit-count";
inline constexpr const char* kUnknown = "unknown";
}  // namespace provenance

/// Catalog answer: a value with its provenance, or an explicit unknown.
/// Zero is returned only when a vanishing statement or the degree balance
/// applies; queries outside every covered route stay unknown.
struct GwResult {
  bool known = false;
  Int value = 0;
  std::string provenance = provenance::kUnknown;
  std::string note;
};

GwResult gw_lookup(const GwQuery& q);

}  // namespace qpb
