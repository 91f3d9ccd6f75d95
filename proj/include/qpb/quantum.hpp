#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qpb/bundle.hpp"
#include "qpb/cohomology.hpp"
#include "qpb/intpoly.hpp"

namespace qpb {

inline const std::vector<std::string> kHXiQVars = {"h", "xi", "q"};

/// Element of the quantum ring in normal form: integer coefficients on
/// h^i xi^j q^k with (i, j) in the classical basis box and k >= 0. The
/// deformation parameter q has complex degree 1, so homogeneous classes
/// have i + j + k constant across their support.
struct QClass {
  BundleSpec spec;
  std::map<std::tuple<int, int, int>, Int> coeff;

  bool operator==(const QClass& o) const {
    return spec == o.spec && coeff == o.coeff;
  }
  bool is_zero() const { return coeff.empty(); }
  bool is_homogeneous() const;
};

IntPoly to_poly(const QClass& c);

/// h^{n+1} as a polynomial over {h, xi, q}.
IntPoly classical_lhs1(const BundleSpec& spec);
/// sum_{i=0..r} (-1)^i c_i h^i xi^{r-i} over {h, xi, q}.
IntPoly classical_lhs2(const BundleSpec& spec);

/// The two defining relations of the quantum ring,
///   h^{n+1} = rhs1(h, xi, q)  and  sum (-1)^i c_i h^i xi^{r-i} = rhs2,
/// with q of degree 1. Construction validates that both right-hand sides
/// are homogeneous of the left-hand degree and that every term carries a
/// positive q-power, so q = 0 recovers the classical presentation and
/// normal-form rewriting terminates.
class QuantumRelations {
public:
  enum class Source {
    SplitClosedForm,   // closed form for a split bundle
    TangentClosedForm, // closed form for the tangent bundle
    TangentAssembled,  // assembled from the invariant catalog
    TemplateFilled,    // a fully determined general template
  };

  QuantumRelations(BundleSpec spec, IntPoly rhs1, IntPoly rhs2, Source src);

  const BundleSpec& spec() const { return spec_; }
  const IntPoly& rhs1() const { return rhs1_; }
  const IntPoly& rhs2() const { return rhs2_; }
  Source source() const { return source_; }

  /// xi^r expressed through the second relation (the rewrite rule).
  const IntPoly& xi_rule() const { return xi_rule_; }

  /// Same presented ring; the construction route is ignored.
  bool same_relations(const QuantumRelations& o) const {
    return spec_ == o.spec_ && rhs1_ == o.rhs1_ && rhs2_ == o.rhs2_;
  }

private:
  BundleSpec spec_;
  IntPoly rhs1_;
  IntPoly rhs2_;
  IntPoly xi_rule_;
  Source source_;
};

/// Closed-form relations for a split bundle:
///   h^{n+1} = prod (xi - m_u h)^{m_u - 1} q^{n+1+r-c_1},
///   prod (xi - m_u h) = q^r.
/// Refused (with the failing inequality) unless
/// c_1 < min(2r, (n+1+2r)/2, (2n+2+r)/2).
QuantumRelations relations_split(const BundleSpec& spec);

/// Closed-form relations for the tangent bundle, n >= 2:
///   h^{n+1} = xi q^n,
///   sum (-1)^i c_i h^i xi^{n-i} = (1 + (-1)^n) q^n.
QuantumRelations relations_tangent(int n);

/// The tangent relations assembled from the invariant catalog constants
/// instead of the closed form; must agree with relations_tangent (the
/// agreement is checked by the test suite, not here).
QuantumRelations derive_tangent_relations(int n);

/// General relation template with integer holes a_{i,j} (first relation,
/// i+j <= c_1-r, q-power n+1-i-j) and b_{i,j} (second relation,
/// i+j <= c_1-n-1, q-power r-i-j; absent when c_1 <= n).
class RelationTemplate {
public:
  using Holes = std::map<std::pair<int, int>, std::optional<Int>>;

  RelationTemplate(BundleSpec spec, Holes a, Holes b);

  const BundleSpec& spec() const { return spec_; }
  const Holes& a() const { return a_; }
  const Holes& b() const { return b_; }
  bool complete() const;
  /// Requires complete().
  QuantumRelations to_relations() const;

private:
  BundleSpec spec_;
  Holes a_;
  Holes b_;
};

/// Template under the Fano hypothesis (c_1 <= n, or c_1 <= n+r with the
/// twist V(-1) nef). The leading hole a_{0, c_1-r} is filled with 1 when
/// c_1 < 2r; for split specs inside the closed-form bound every hole is
/// filled by expanding relations_split.
RelationTemplate relations_template_general(const BundleSpec& spec);

/// Unique normal form in the quantum quotient: xi^r is replaced through the
/// second relation and h^{n+1} through the first, innermost first, until
/// the support lies in the basis box times q-powers. Terminates because
/// every substitution either lowers the (h, xi)-total degree or keeps it
/// while lowering the xi-degree.
QClass q_normal_form(const IntPoly& p, const QuantumRelations& rel);

/// Product in the presented quotient ring.
QClass q_product(const QClass& x, const QClass& y, const QuantumRelations& rel);

/// Checks that the two-route invariant W_i equals the classical pairing of
/// prod (xi - m_u h)^{m_u-1} h^{n-i} xi^{2r-c_1-1+i} against the point
/// class. Hypotheses as for relations_split, plus 0 <= i <= c_1 - r.
bool verify_w_pairing(const BundleSpec& spec, int i);

}  // namespace qpb
